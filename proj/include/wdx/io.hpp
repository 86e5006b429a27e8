#pragma once

// Text and JSON forms of monomials, monomial sets, weight distributions and
// spectra. Counts are always decimal strings.

#include "wdx/orbit.hpp"

#include "json.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace wdx::io {

using Json = nlohmann::ordered_json;

inline Monomial parse_monomial_text(int m, std::string_view text)
{
    if (text == "1")
        return Monomial::one(m);
    std::vector<int> idx;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != 'x')
            throw InputError("monomial text '" + std::string(text) + "': expected 'x' at position "
                             + std::to_string(pos));
        ++pos;
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start || pos - start > 2)
            throw InputError("monomial text '" + std::string(text) + "': bad variable index");
        idx.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    }
    if (idx.empty())
        throw InputError("empty monomial text");
    return Monomial::from_indices(m, idx);
}

inline Json to_json(const Monomial& f) { return Json(f.indices()); }

inline Monomial monomial_from_json(int m, const Json& j)
{
    if (!j.is_array())
        throw InputError("monomial JSON must be an array of indices");
    std::vector<int> idx;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw InputError("monomial index must be an integer");
        idx.push_back(e.get<int>());
    }
    return Monomial::from_indices(m, idx);
}

inline Json to_json(const MonomialSet& set)
{
    Json j;
    j["m"] = set.m();
    Json arr = Json::array();
    for (const auto& f : set)
        arr.push_back(to_json(f));
    j["monomials"] = std::move(arr);
    return j;
}

inline MonomialSet monomial_set_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("m") || !j.contains("monomials"))
        throw InputError("monomial set JSON needs fields \"m\" and \"monomials\"");
    if (!j["m"].is_number_integer())
        throw InputError("\"m\" must be an integer");
    const int m = j["m"].get<int>();
    check_variable_count(m);
    if (!j["monomials"].is_array())
        throw InputError("\"monomials\" must be an array");
    std::vector<Monomial> members;
    for (const auto& e : j["monomials"])
        members.push_back(monomial_from_json(m, e));
    return MonomialSet(m, members);
}

inline Json to_json(const CodeSpec& code) { return to_json(code.info_set()); }

inline CodeSpec code_from_json(const Json& j) { return CodeSpec(monomial_set_from_json(j)); }

inline Json to_json(const WeightDistribution& wd)
{
    Json j;
    j["n"] = wd.n();
    j["k"] = wd.k();
    j["complete"] = wd.complete();
    Json counts = Json::object();
    for (const auto& [w, c] : wd.counts())
        counts[std::to_string(w)] = c.str();
    j["counts"] = std::move(counts);
    return j;
}

inline WeightDistribution distribution_from_json(const Json& j)
{
    for (const char* key : {"n", "k", "complete", "counts"})
        if (!j.contains(key))
            throw InputError(std::string("weight distribution JSON missing \"") + key + "\"");
    WeightDistribution wd(j["n"].get<std::size_t>(), j["k"].get<std::size_t>(), j["complete"].get<bool>());
    for (const auto& [w, c] : j["counts"].items()) {
        if (!c.is_string())
            throw InputError("counts must be decimal strings");
        const auto s = c.get<std::string>();
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("count '" + s + "' is not a nonnegative decimal integer");
        wd.set(std::stoul(w), BigInt(s));
    }
    return wd;
}

/// "1 + 108X^8 + 576X^12 + ... + X^32".
inline std::string to_polynomial_text(const WeightDistribution& wd)
{
    if (wd.counts().empty())
        return "0";
    std::string out;
    for (const auto& [w, c] : wd.counts()) {
        if (!out.empty())
            out += " + ";
        if (w == 0) {
            out += c.str();
            continue;
        }
        if (c != 1)
            out += c.str();
        out += "X";
        if (w != 1)
            out += "^" + std::to_string(w);
    }
    return out;
}

inline Json to_json(const SpectrumEntry& e)
{
    Json j;
    j["weight"] = e.weight;
    j["count"] = e.count.str();
    j["exact"] = e.exact;
    j["mu"] = e.mu;
    return j;
}

inline Json to_json(const std::vector<SpectrumEntry>& spectrum)
{
    Json arr = Json::array();
    for (const auto& e : spectrum)
        arr.push_back(to_json(e));
    return arr;
}

inline std::vector<SpectrumEntry> spectrum_from_json(const Json& j)
{
    if (!j.is_array())
        throw InputError("spectrum JSON must be an array");
    std::vector<SpectrumEntry> out;
    for (const auto& e : j)
        out.push_back({e.at("weight").get<std::size_t>(), BigInt(e.at("count").get<std::string>()),
                       e.at("exact").get<bool>(), e.at("mu").get<int>()});
    return out;
}

/// Ordered array of index pairs, as in the degree-2 ordering tables.
inline Json order_to_json(const std::vector<Monomial>& order)
{
    Json arr = Json::array();
    for (const auto& f : order)
        arr.push_back(to_json(f));
    return arr;
}

struct OrbitReport {
    Monomial monomial;
    BigInt formula;
    BigInt enumerated;

    bool match() const { return formula == enumerated; }
};

inline Json to_json(const OrbitReport& r)
{
    Json j;
    j["monomial"] = to_json(r.monomial);
    j["formula"] = r.formula.str();
    j["enumerated"] = r.enumerated.str();
    j["match"] = r.match();
    return j;
}

} // namespace wdx::io
