#include "qbetti/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "qbetti/audits.hpp"
#include "qbetti/bounds.hpp"
#include "qbetti/suite.hpp"
#include "qbetti/system_io.hpp"

namespace qbetti::cli
{

namespace
{

using nlohmann::json;

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Range
{
    int lo = 0;
    int hi = 0;
};

int parse_int(std::string const& text, std::string const& flag)
{
    Rational const v = [&] {
        try
        {
            return parse_rational(text);
        }
        catch (std::invalid_argument const& e)
        {
            throw UsageError(flag + ": " + e.what());
        }
    }();
    if (denominator(v) != 1 || abs(numerator(v)) > 1'000'000)
        throw UsageError(flag + ": expected an integer, got '" + text + "'");
    return numerator(v).convert_to<int>();
}

Rational parse_rational_flag(std::string const& text, std::string const& flag)
{
    try
    {
        return parse_rational(text);
    }
    catch (std::invalid_argument const& e)
    {
        throw UsageError(flag + ": " + e.what());
    }
}

// "n" or "lo:hi", inclusive.
Range parse_range(std::string const& text, std::string const& flag)
{
    auto const colon = text.find(':');
    if (colon == std::string::npos)
    {
        int const v = parse_int(text, flag);
        return {v, v};
    }
    Range r{parse_int(text.substr(0, colon), flag), parse_int(text.substr(colon + 1), flag)};
    if (r.lo > r.hi)
        throw UsageError(flag + ": empty range '" + text + "'");
    return r;
}

std::vector<std::string> split(std::string const& text, char sep)
{
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep))
        parts.push_back(part);
    return parts;
}

std::vector<Rational> parse_rational_list(std::string const& text, std::string const& flag)
{
    std::vector<Rational> out;
    for (auto const& part : split(text, ','))
        out.push_back(parse_rational_flag(part, flag));
    return out;
}

std::string join(std::vector<int> const& values, char sep)
{
    std::string out;
    for (std::size_t t = 0; t < values.size(); ++t)
    {
        if (t)
            out += sep;
        out += std::to_string(values[t]);
    }
    return out;
}

// Same text in CSV and JSON so both carry identical numbers.
std::string format_double(double v)
{
    return json(v).dump();
}

struct Emitter
{
    std::string format = "json";
    std::string output;

    void check() const
    {
        if (format != "json" && format != "csv")
            throw UsageError("--format must be csv or json");
    }

    void emit(std::string const& text, std::ostream& out) const
    {
        if (output.empty())
        {
            out << text;
            return;
        }
        std::ofstream file(output, std::ios::binary);
        if (!file)
            throw UsageError("cannot write " + output);
        file << text;
    }
};

void add_emitter(CLI::App* sub, Emitter& e)
{
    sub->add_option("--format", e.format, "csv or json")->capture_default_str();
    sub->add_option("--output", e.output, "write the document to this path instead of stdout");
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs
{
    std::string s = "1:4";
    std::string k = "1:4";
    std::string i;
    bool aggregate = false;
    bool classical = false;
    Emitter emitter;
};

std::string run_bounds(BoundsArgs const& a)
{
    Range const s_range = parse_range(a.s, "--s");
    Range const k_range = parse_range(a.k, "--k");
    std::optional<Range> i_range;
    if (!a.i.empty())
        i_range = parse_range(a.i, "--i");

    bool const csv = a.emitter.format == "csv";
    std::ostringstream text;
    json rows = json::array();

    if (a.aggregate)
    {
        if (csv)
            text << "s,k,simple_num,simple_den,exp_form,total_num,total_den\n";
        for (int k = k_range.lo; k <= k_range.hi; ++k)
            for (int s = s_range.lo; s <= s_range.hi; ++s)
            {
                if (s < 1 || s > k)
                    continue;
                auto const agg = bounds::bound_aggregate(s, k);
                json row = {{"s", s}, {"k", k}};
                row["simple"] = agg.simple ? json(to_fraction_string(*agg.simple)) : json(nullptr);
                row["exp_form"] = agg.exp_form ? json(*agg.exp_form) : json(nullptr);
                row["total"] = to_fraction_string(*agg.total);
                if (csv)
                {
                    text << s << "," << k << ",";
                    if (agg.simple)
                        text << numerator(*agg.simple) << "," << denominator(*agg.simple) << ","
                             << format_double(*agg.exp_form);
                    else
                        text << ",,";
                    text << "," << numerator(*agg.total) << "," << denominator(*agg.total) << "\n";
                }
                rows.push_back(std::move(row));
            }
    }
    else
    {
        if (csv)
        {
            text << "s,k,i,bound_num,bound_den";
            if (a.classical)
                text << ",nonrigorous_sd_k,nonrigorous_k_s";
            text << "\n";
        }
        for (int k = k_range.lo; k <= k_range.hi; ++k)
            for (int s = s_range.lo; s <= s_range.hi; ++s)
            {
                int const i_lo = i_range ? i_range->lo : 0;
                int const i_hi = i_range ? i_range->hi : k - 1;
                for (int i = i_lo; i <= i_hi; ++i)
                {
                    bounds::BoundQuery const q{s, k, i};
                    if (!q.valid())
                        continue;
                    Rational const b = bounds::bound_betti(q);
                    json row = {{"s", s}, {"k", k}, {"i", i}, {"bound", to_fraction_string(b)}};
                    if (csv)
                        text << s << "," << k << "," << i << "," << numerator(b) << "," << denominator(b);
                    if (a.classical)
                    {
                        // Unit constants in place of the O(.) constants.
                        BigInt const sd_k = boost::multiprecision::pow(BigInt(2 * s), static_cast<unsigned>(k));
                        BigInt const k_s = boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(s));
                        row["nonrigorous_sd_k"] = sd_k.str();
                        row["nonrigorous_k_s"] = k_s.str();
                        if (csv)
                            text << "," << sd_k << "," << k_s;
                    }
                    if (csv)
                        text << "\n";
                    rows.push_back(std::move(row));
                }
            }
    }

    if (rows.empty())
        throw UsageError("no valid (s, k, i) in the requested ranges; need 1 <= s <= k, 0 <= i <= k-1");
    if (csv)
        return text.str();
    json doc = {{"table", a.aggregate ? "bound_aggregate" : "bounds"}, {"rows", std::move(rows)}};
    if (a.classical && !a.aggregate)
        doc["note"] = "nonrigorous_* columns are illustrative, non-rigorous: unit constants";
    return doc.dump(2) + "\n";
}

// -------------------------------------------------------------------- ci

struct CiArgs
{
    std::string j = "0:3";
    std::string k = "1:4";
    std::string degrees;
    Emitter emitter;
};

std::string run_ci(CiArgs const& a)
{
    Range const j_range = parse_range(a.j, "--j");
    Range const k_range = parse_range(a.k, "--k");
    std::vector<int> given;
    if (!a.degrees.empty())
        for (auto const& part : split(a.degrees, ','))
            given.push_back(parse_int(part, "--degrees"));

    bool const csv = a.emitter.format == "csv";
    std::ostringstream text;
    if (csv)
        text << "j,k,degrees,betti_total\n";
    json rows = json::array();
    for (int k = k_range.lo; k <= k_range.hi; ++k)
        for (int j = j_range.lo; j <= j_range.hi; ++j)
        {
            if (j < 0 || j > k)
                continue;
            std::vector<int> degrees;
            if (given.empty())
                degrees.assign(static_cast<std::size_t>(j), 2);
            else if (given.size() == 1)
                degrees.assign(static_cast<std::size_t>(j), given.front());
            else if (static_cast<int>(given.size()) == j)
                degrees = given;
            else
                continue;
            BigInt value;
            try
            {
                value = bounds::b_ci(j, k, bounds::DegreeSequence(degrees));
            }
            catch (std::domain_error const& e)
            {
                throw UsageError(e.what());
            }
            if (csv)
                text << j << "," << k << "," << join(degrees, ';') << "," << value << "\n";
            rows.push_back({{"j", j}, {"k", k}, {"degrees", degrees}, {"betti_total", value.str()}});
        }
    if (rows.empty())
        throw UsageError("no valid (j, k, degrees) in the requested ranges");
    if (csv)
        return text.str();
    return json{{"table", "ci"}, {"rows", std::move(rows)}}.dump(2) + "\n";
}

// ------------------------------------------------------- verify / audit

struct VerifyArgs
{
    std::string seed = "0";
    std::string eps = "1/10";
    std::string delta = "1/1000";
    std::string lifted_resolution = "1/2";
    Emitter emitter;
};

struct Outcome
{
    std::string text;
    std::vector<Verdict> verdicts;
};

Outcome run_verify(VerifyArgs const& a)
{
    verify::SuiteOptions opt;
    opt.seed = static_cast<std::uint64_t>(parse_int(a.seed, "--seed"));
    opt.eps = parse_rational_flag(a.eps, "--eps");
    opt.delta = parse_rational_flag(a.delta, "--delta");
    opt.lifted_resolution = parse_rational_flag(a.lifted_resolution, "--lifted-resolution");

    auto const result = verify::run_verification_suite(opt);
    Outcome outcome;
    for (auto const& e : result.entries)
        outcome.verdicts.push_back(e.verdict);
    if (a.emitter.format == "csv")
    {
        std::ostringstream text;
        text << "name,audit,verdict\n";
        for (auto const& e : result.entries)
            text << e.name << "," << e.audit << "," << to_string(e.verdict) << "\n";
        outcome.text = text.str();
    }
    else
        outcome.text = verify::to_json(result).dump(2) + "\n";
    return outcome;
}

struct AuditArgs
{
    std::string name;
    std::string scenario = "products";
    std::string k = "2";
    std::string system;
    std::string input;
    std::string resolution;
    std::string eps = "1/10";
    std::string delta = "1/1000";
    std::string t = "0,1/1000";
    std::string seed = "0";
    std::string radius = "1";
    std::string tau = "1/10";
    bool use_oracle = false;
    Emitter emitter;
};

verify::Scenario audit_scenario(AuditArgs const& a)
{
    if (!a.system.empty())
    {
        auto const sys = quad::load_system(a.system);
        if (a.resolution.empty())
            throw UsageError("--system needs --resolution; the grid covers [-1,1]^k rounded out to whole cells");
        Rational const res = parse_rational_flag(a.resolution, "--resolution");
        Rational const half = Rational(ceil_of(Rational(1) / res)) * res;
        return verify::scenario_from_system(a.system, sys.polys, quad::GridSpec::cube(sys.k, -half, half, res));
    }
    int const k = parse_int(a.k, "--k");
    try
    {
        auto sc = verify::scenario_by_name(a.scenario, k);
        if (!a.resolution.empty() && a.name == "bound")
        {
            Rational const res = parse_rational_flag(a.resolution, "--resolution");
            auto& box = sc.grid.box;
            sc.grid = quad::GridSpec{box, res};
            sc.grid.validate();
        }
        return sc;
    }
    catch (std::exception const& e)
    {
        throw UsageError(e.what());
    }
}

std::vector<quad::QuadraticPoly> default_cone()
{
    quad::QuadraticPoly p(3);
    p.quad().set(0, 0, 1);
    p.quad().set(1, 1, 1);
    p.quad().set(2, 2, -1);
    return {p};
}

homology::BettiVector betti_from_json(json const& v, std::string const& where)
{
    if (!v.is_array())
        throw UsageError(where + " must be an array of nonnegative integers");
    std::vector<std::size_t> values;
    for (auto const& x : v)
    {
        if (!x.is_number_unsigned())
            throw UsageError(where + " must be an array of nonnegative integers");
        values.push_back(x.get<std::size_t>());
    }
    return homology::BettiVector(std::move(values));
}

Outcome run_mayer_vietoris_input(AuditArgs const& a)
{
    std::ifstream in(a.input);
    if (!in)
        throw UsageError("cannot open " + a.input);
    json doc;
    try
    {
        doc = json::parse(in);
    }
    catch (json::exception const& e)
    {
        throw UsageError(std::string("malformed Mayer-Vietoris input: ") + e.what());
    }
    if (!doc.contains("count") || !doc["count"].is_number_integer() || !doc.contains("union") ||
        !doc.contains("pieces") || !doc["pieces"].is_array())
        throw UsageError("Mayer-Vietoris input needs 'count', 'union' and 'pieces'");

    verify::MayerVietorisReport report;
    try
    {
        homology::PieceFamily family(doc["count"].get<int>());
        for (auto const& piece : doc["pieces"])
        {
            if (!piece.contains("subset") || !piece["subset"].is_array() || !piece.contains("betti"))
                throw UsageError("each piece needs a 'subset' array and a 'betti' array");
            family.set(piece["subset"].get<std::vector<int>>(), betti_from_json(piece["betti"], "piece betti"));
        }
        auto const union_betti = betti_from_json(doc["union"], "union");
        int const max_degree = doc.contains("i") ? doc["i"].get<int>() : static_cast<int>(union_betti.size()) - 1;
        int const min_degree = doc.contains("i") ? max_degree : 0;
        if (min_degree < 0)
            throw UsageError("'i' must be nonnegative");
        report = verify::mayer_vietoris_report(doc.value("name", a.input), union_betti, family, max_degree);
        if (min_degree > 0)
        {
            report.rows.erase(report.rows.begin(), report.rows.begin() + min_degree);
            std::vector<Verdict> verdicts;
            for (auto const& row : report.rows)
                verdicts.push_back(row.verdict);
            report.verdict = combine(verdicts);
        }
    }
    catch (json::exception const& e)
    {
        throw UsageError(std::string("malformed Mayer-Vietoris input: ") + e.what());
    }

    if (a.emitter.format == "csv")
    {
        std::ostringstream text;
        text << "i,union_betti,bound,verdict\n";
        for (auto const& row : report.rows)
            text << row.degree << "," << row.union_betti << "," << row.bound << "," << to_string(row.verdict) << "\n";
        return {text.str(), {report.verdict}};
    }
    return {verify::to_json(report).dump(2) + "\n", {report.verdict}};
}

Outcome run_audit(AuditArgs const& a)
{
    std::uint64_t const seed = static_cast<std::uint64_t>(parse_int(a.seed, "--seed"));
    quad::DeformationParams params{parse_rational_flag(a.eps, "--eps"), parse_rational_flag(a.delta, "--delta"), 0};
    try
    {
        params.validate();
    }
    catch (std::domain_error const& e)
    {
        throw UsageError(e.what());
    }
    bool const csv = a.emitter.format == "csv";

    if (a.name == "bound")
    {
        auto const sc = audit_scenario(a);
        verify::BettiSource source = verify::UseOracle{};
        if (!a.use_oracle)
            source = sc.grid;
        auto const r = verify::bound_audit(sc, source);
        if (csv)
        {
            std::ostringstream text;
            text << "i,betti,bound_num,bound_den,verdict\n";
            for (auto const& row : r.rows)
                text << row.i << "," << row.betti << "," << numerator(row.bound) << "," << denominator(row.bound)
                     << "," << to_string(row.verdict) << "\n";
            return {text.str(), {r.overall}};
        }
        return {verify::to_json(r).dump(2) + "\n", {r.overall}};
    }

    json doc;
    Verdict verdict = Verdict::Pass;
    if (a.name == "smith")
    {
        auto forms = default_cone();
        if (!a.system.empty())
            forms = quad::load_system(a.system).polys;
        int const n = forms.front().variables();
        Rational const radius = parse_rational_flag(a.radius, "--radius");
        Rational const res = a.resolution.empty() ? Rational(1, 20) : parse_rational_flag(a.resolution, "--resolution");
        auto const r = verify::smith_audit(forms, radius, quad::sphere_grid_spec(n, radius, res),
                                           parse_rational_flag(a.tau, "--tau"), seed);
        doc = verify::to_json(r);
        verdict = r.verdict;
    }
    else if (a.name == "double-cover" || a.name == "deformation")
    {
        auto const sc = audit_scenario(a);
        Rational const res = a.resolution.empty() ? Rational(1, 2) : parse_rational_flag(a.resolution, "--resolution");
        auto const spec = verify::lifted_grid_spec(sc.k, params.eps, res);
        if (a.name == "double-cover")
        {
            auto const r = verify::double_cover_audit(sc, params, spec);
            doc = verify::to_json(r);
            verdict = r.verdict;
        }
        else
        {
            auto const r = verify::deformation_audit(sc, params, parse_rational_list(a.t, "--t"), spec, seed);
            doc = verify::to_json(r);
            verdict = r.verdict;
        }
    }
    else if (a.name == "mayer-vietoris")
    {
        if (!a.input.empty())
            return run_mayer_vietoris_input(a);
        json all = json::array();
        std::vector<Verdict> verdicts;
        for (auto make : {verify::union_wedge_of_circles, verify::union_disjoint_circles, verify::union_three_arcs})
        {
            auto const r = verify::mayer_vietoris_report(make());
            all.push_back(verify::to_json(r));
            verdicts.push_back(r.verdict);
        }
        doc = {{"reports", std::move(all)}};
        verdict = combine(verdicts);
    }
    else if (a.name == "alexander")
    {
        auto const r = verify::alexander_audit("equator", verify::cube_surface(4), verify::surface_loop(4, 2), 2);
        doc = verify::to_json(r);
        verdict = r.verdict;
    }
    else
        throw UsageError("unknown audit '" + a.name +
                         "' (expected bound, smith, double-cover, deformation, mayer-vietoris, alexander)");

    if (csv)
        return {"audit,verdict\n" + a.name + "," + std::string(to_string(verdict)) + "\n", {verdict}};
    return {doc.dump(2) + "\n", {verdict}};
}

} // namespace

int exit_code_for(std::span<Verdict const> verdicts)
{
    switch (combine(verdicts))
    {
    case Verdict::Violation:
        return kExitViolation;
    case Verdict::Inconclusive:
        return kExitInconclusive;
    case Verdict::Pass:
        return kExitPass;
    }
    return kExitPass;
}

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Betti-number bounds for quadratic semi-algebraic sets, with GF(2) homology audits"};
    app.name("qbetti");
    app.require_subcommand(1, 1);

    BoundsArgs bounds_args;
    auto* bounds_cmd = app.add_subcommand("bounds", "per-degree or aggregate bounds over ranges of s, k, i");
    bounds_cmd->add_option("--s", bounds_args.s, "number of polynomials, n or lo:hi")->capture_default_str();
    bounds_cmd->add_option("--k", bounds_args.k, "ambient dimension, n or lo:hi")->capture_default_str();
    bounds_cmd->add_option("--i", bounds_args.i, "homology degree, n or lo:hi (default: all)");
    bounds_cmd->add_flag("--aggregate", bounds_args.aggregate, "emit the simple, exponential and total bounds");
    bounds_cmd->add_flag("--compare-classical", bounds_args.classical,
                         "add (sd)^k and k^s reference columns (unit constants, non-rigorous)");
    add_emitter(bounds_cmd, bounds_args.emitter);

    CiArgs ci_args;
    auto* ci_cmd = app.add_subcommand("ci", "total Betti numbers of complex complete intersections");
    ci_cmd->add_option("--j", ci_args.j, "number of hypersurfaces, n or lo:hi")->capture_default_str();
    ci_cmd->add_option("--k", ci_args.k, "projective dimension, n or lo:hi")->capture_default_str();
    ci_cmd->add_option("--degrees", ci_args.degrees,
                       "comma-separated degrees; one value is repeated j times (default: all 2)");
    add_emitter(ci_cmd, ci_args.emitter);

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run every built-in scenario audit");
    verify_cmd->add_option("--seed", verify_args.seed, "seed for positive definite perturbations")
        ->capture_default_str();
    verify_cmd->add_option("--eps", verify_args.eps, "ball/sphere scale")->capture_default_str();
    verify_cmd->add_option("--delta", verify_args.delta, "perturbation scale")->capture_default_str();
    verify_cmd->add_option("--lifted-resolution", verify_args.lifted_resolution, "sphere grid cell width")
        ->capture_default_str();
    add_emitter(verify_cmd, verify_args.emitter);

    AuditArgs audit_args;
    auto* audit_cmd = app.add_subcommand("audit", "run one audit with explicit parameters");
    audit_cmd
        ->add_option("--name", audit_args.name,
                     "bound | smith | double-cover | deformation | mayer-vietoris | alexander")
        ->required();
    audit_cmd->add_option("--scenario", audit_args.scenario, "products | shell | empty")->capture_default_str();
    audit_cmd->add_option("--k", audit_args.k, "scenario dimension")->capture_default_str();
    audit_cmd->add_option("--system", audit_args.system, "quadratic system document (JSON)");
    audit_cmd->add_option("--input", audit_args.input, "Betti numbers for a Mayer-Vietoris check (JSON)");
    audit_cmd->add_option("--resolution", audit_args.resolution, "grid cell width");
    audit_cmd->add_option("--eps", audit_args.eps)->capture_default_str();
    audit_cmd->add_option("--delta", audit_args.delta)->capture_default_str();
    audit_cmd->add_option("--t", audit_args.t, "comma-separated deformation times in [0, delta]")
        ->capture_default_str();
    audit_cmd->add_option("--seed", audit_args.seed)->capture_default_str();
    audit_cmd->add_option("--radius", audit_args.radius, "sphere radius for smith")->capture_default_str();
    audit_cmd->add_option("--tau", audit_args.tau, "zero-set thickening for smith")->capture_default_str();
    audit_cmd->add_flag("--use-oracle", audit_args.use_oracle, "bound audit from the scenario oracle");
    add_emitter(audit_cmd, audit_args.emitter);

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (CLI::CallForHelp const&)
    {
        out << app.help();
        return kExitPass;
    }
    catch (CLI::CallForAllHelp const&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    }
    catch (CLI::ParseError const& e)
    {
        err << "qbetti: " << e.what() << "\n";
        return kExitUsage;
    }

    try
    {
        if (bounds_cmd->parsed())
        {
            bounds_args.emitter.check();
            bounds_args.emitter.emit(run_bounds(bounds_args), out);
            return kExitPass;
        }
        if (ci_cmd->parsed())
        {
            ci_args.emitter.check();
            ci_args.emitter.emit(run_ci(ci_args), out);
            return kExitPass;
        }
        Outcome outcome;
        Emitter const* emitter = nullptr;
        if (verify_cmd->parsed())
        {
            verify_args.emitter.check();
            outcome = run_verify(verify_args);
            emitter = &verify_args.emitter;
        }
        else
        {
            audit_args.emitter.check();
            outcome = run_audit(audit_args);
            emitter = &audit_args.emitter;
        }
        emitter->emit(outcome.text, out);
        return exit_code_for(outcome.verdicts);
    }
    catch (UsageError const& e)
    {
        err << "qbetti: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (homology::MissingPieceError const& e)
    {
        err << "qbetti: inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    }
    catch (std::domain_error const& e)
    {
        err << "qbetti: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (std::invalid_argument const& e)
    {
        err << "qbetti: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace qbetti::cli
