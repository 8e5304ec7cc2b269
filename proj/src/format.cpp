#include "sylv/format.hpp"

#include <sstream>

#include "sylv/errors.hpp"

namespace sylv {

namespace {

// one power of the variable: "", "x", "x^3"
std::string var_power(std::string_view var, int k) {
    if (k == 0)
        return "";
    if (k == 1)
        return std::string(var);
    return std::string(var) + "^" + std::to_string(k);
}

std::string abs_str(const Rat& c) {
    std::string s = c.str();
    if (!s.empty() && s.front() == '-')
        s.erase(s.begin());
    return s;
}

} // namespace

std::string to_text(const UniPoly& p, std::string_view var) {
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat c = p.coeff(k);
        if (c.is_zero())
            continue;
        if (first) {
            if (c.sign() < 0)
                out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        const std::string mag = abs_str(c);
        const std::string xp = var_power(var, k);
        if (xp.empty())
            out << mag;
        else if (mag == "1")
            out << xp;
        else
            out << mag << "*" << xp;
    }
    return out.str();
}

std::string to_text(const BiPoly& p) {
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int j = 0; j <= p.deg_t(); ++j) {
        const UniPoly& c = p.t_coeff(j);
        if (c.is_zero())
            continue;
        if (!first)
            out << " + ";
        first = false;
        out << "(" << to_text(c) << ")";
        const std::string tp = var_power("T", j);
        if (!tp.empty())
            out << "*" << tp;
    }
    return out.str();
}

ordered_json to_json(const UniPoly& p) {
    ordered_json j;
    j["var"] = "x";
    ordered_json coeffs = ordered_json::array();
    for (const Rat& c : p.coeffs())
        coeffs.push_back(c.str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

UniPoly unipoly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw DomainError("polynomial JSON requires a \"coeffs\" array");
    std::vector<Rat> coeffs;
    for (const auto& c : j["coeffs"])
        coeffs.push_back(Rat::parse(c.get<std::string>()));
    return UniPoly(std::move(coeffs));
}

ordered_json to_json(const BiPoly& p) {
    ordered_json j;
    j["vars"] = ordered_json::array({"x", "T"});
    ordered_json tc = ordered_json::array();
    for (const UniPoly& c : p.t_coeffs())
        tc.push_back(to_json(c));
    j["t_coeffs"] = std::move(tc);
    return j;
}

BiPoly bipoly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("t_coeffs") || !j["t_coeffs"].is_array())
        throw DomainError("bivariate polynomial JSON requires a \"t_coeffs\" array");
    std::vector<UniPoly> tc;
    for (const auto& c : j["t_coeffs"])
        tc.push_back(unipoly_from_json(c));
    return BiPoly(std::move(tc));
}

ordered_json to_json(const VerificationReport& report) {
    ordered_json j;
    j["m"] = report.m;
    j["n"] = report.n;
    j["seed"] = report.seed;
    ordered_json checks = ordered_json::array();
    for (const CheckRecord& c : report.checks) {
        ordered_json rec;
        rec["name"] = c.name;
        rec["case"] = c.case_tag;
        rec["pass"] = c.pass;
        if (!c.pass) {
            rec["expected"] = c.expected;
            rec["actual"] = c.actual;
        }
        checks.push_back(std::move(rec));
    }
    j["checks"] = std::move(checks);
    j["pass"] = report.pass();
    return j;
}

std::vector<Rat> parse_rat_list(std::string_view text) {
    std::vector<Rat> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - start);
        // trim surrounding whitespace
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
            item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
            item.remove_suffix(1);
        out.push_back(Rat::parse(item));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace sylv
