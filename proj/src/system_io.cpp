#include "qbetti/system_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qbetti::quad
{

namespace
{

Rational rational_field(nlohmann::json const& v, std::string const& where)
{
    if (!v.is_string())
        throw std::invalid_argument(where + ": coefficients must be rational strings like \"p/q\"");
    return parse_rational(v.get<std::string>());
}

nlohmann::json const& field(nlohmann::json const& entry, char const* name, std::string const& where)
{
    auto const it = entry.find(name);
    if (it == entry.end())
        throw std::invalid_argument(where + " is missing field '" + name + "'");
    return *it;
}

} // namespace

QuadraticSystem system_from_json(nlohmann::json const& doc)
{
    if (!doc.is_object())
        throw std::invalid_argument("system document must be an object");
    if (!doc.contains("k") || !doc["k"].is_number_integer())
        throw std::invalid_argument("system document needs integer field 'k'");
    QuadraticSystem system;
    system.k = doc["k"].get<int>();
    if (system.k < 1)
        throw std::invalid_argument("'k' must be >= 1");
    if (!doc.contains("polys") || !doc["polys"].is_array())
        throw std::invalid_argument("system document needs array field 'polys'");

    int index = 0;
    for (auto const& entry : doc["polys"])
    {
        std::string const where = "polys[" + std::to_string(index++) + "]";
        if (!entry.is_object())
            throw std::invalid_argument(where + " must be an object");
        int const k = system.k;
        QuadraticPoly p(k);

        auto const& quad = field(entry, "quad", where);
        if (!quad.is_array() || static_cast<int>(quad.size()) != k)
            throw std::invalid_argument(where + ".quad must be a k x k matrix");
        std::vector<std::vector<Rational>> rows;
        for (auto const& row : quad)
        {
            if (!row.is_array() || static_cast<int>(row.size()) != k)
                throw std::invalid_argument(where + ".quad must be a k x k matrix");
            std::vector<Rational> values;
            for (auto const& v : row)
                values.push_back(rational_field(v, where + ".quad"));
            rows.push_back(std::move(values));
        }
        p.quad() = SymmetricMatrix::from_rows(rows);

        auto const& lin = field(entry, "lin", where);
        if (!lin.is_array() || static_cast<int>(lin.size()) != k)
            throw std::invalid_argument(where + ".lin must have length k");
        for (int i = 0; i < k; ++i)
            p.set_lin(i, rational_field(lin[static_cast<std::size_t>(i)], where + ".lin"));

        p.set_constant(rational_field(field(entry, "const", where), where + ".const"));
        system.polys.push_back(std::move(p));
    }
    return system;
}

QuadraticSystem parse_system(std::string_view text)
{
    nlohmann::json doc;
    try
    {
        doc = nlohmann::json::parse(text);
    }
    catch (nlohmann::json::parse_error const& e)
    {
        throw std::invalid_argument(std::string("malformed system document: ") + e.what());
    }
    return system_from_json(doc);
}

QuadraticSystem load_system(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open system file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_system(buffer.str());
}

nlohmann::json to_json(QuadraticSystem const& system)
{
    nlohmann::json polys = nlohmann::json::array();
    for (auto const& p : system.polys)
    {
        nlohmann::json quad = nlohmann::json::array();
        for (int i = 0; i < p.variables(); ++i)
        {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < p.variables(); ++j)
                row.push_back(to_fraction_string(p.quad()(i, j)));
            quad.push_back(std::move(row));
        }
        nlohmann::json lin = nlohmann::json::array();
        for (auto const& v : p.lin())
            lin.push_back(to_fraction_string(v));
        polys.push_back({{"quad", std::move(quad)}, {"lin", std::move(lin)}, {"const", to_fraction_string(p.constant())}});
    }
    return {{"k", system.k}, {"polys", std::move(polys)}};
}

} // namespace qbetti::quad
