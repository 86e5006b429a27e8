#pragma once

// Self-check suites that compare closed forms with explicit enumeration.
// Each suite returns a report; nothing here prints.

#include "wdx/construct.hpp"
#include "wdx/orbit.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace wdx {

struct VerifyOptions {
    int m = 5;
    unsigned max_k = 22;
    unsigned threads = 0;
    std::uint64_t orbit_limit = kDefaultOrbitLimit;
    std::uint64_t seed = 1;
    std::size_t samples = 200;
    std::size_t random_sets = 20;
};

struct SuiteReport {
    std::string name;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    explicit SuiteReport(std::string suite) : name(std::move(suite)) {}

    bool passed() const { return failures.empty() && checked > 0; }

    void fail(std::string what) { failures.push_back(std::move(what)); }
};

namespace detail {

inline std::string set_text(const MonomialSet& set)
{
    std::string out = "{";
    for (const auto& f : set) {
        if (out.size() > 1)
            out += ",";
        out += f.to_string();
    }
    return out + "}";
}

inline std::vector<Monomial> linear_extension(std::vector<Monomial> layer)
{
    std::sort(layer.begin(), layer.end(), [](const Monomial& a, const Monomial& b) {
        const auto sa = a.indices(), sb = b.indices();
        const int ta = std::accumulate(sa.begin(), sa.end(), 0);
        const int tb = std::accumulate(sb.begin(), sb.end(), 0);
        return ta != tb ? ta < tb : a.mask() < b.mask();
    });
    return layer;
}

inline bool same_distribution(const WeightDistribution& a, const WeightDistribution& b)
{
    return a.counts() == b.counts();
}

} // namespace detail

/// Every order ideal of the degree-`degree` layer under the monomial order,
/// each returned as the chosen monomials of that layer.
inline std::vector<std::vector<Monomial>> layer_ideals(int m, int degree)
{
    const auto order = detail::linear_extension(monomials_of_degree(m, degree));
    std::vector<std::vector<Monomial>> out;
    std::vector<Monomial> chosen;
    std::vector<bool> in(std::size_t{1} << m, false);
    std::function<void(std::size_t)> walk = [&](std::size_t pos) {
        if (pos == order.size()) {
            out.push_back(chosen);
            return;
        }
        walk(pos + 1);
        const auto& f = order[pos];
        for (const auto& p : immediate_predecessors(f))
            if (p.degree() == degree && !in[p.mask()])
                return;
        in[f.mask()] = true;
        chosen.push_back(f);
        walk(pos + 1);
        chosen.pop_back();
        in[f.mask()] = false;
    };
    walk(0);
    return out;
}

/// Orbit sizes and weights against 2^{deg f + |lambda_f|} and 2^{m - deg f}.
inline SuiteReport verify_orbits(const VerifyOptions& opt)
{
    SuiteReport rep("orbits");
    for (const auto& f : all_monomials(opt.m)) {
        const RestrictedAffineAction action(f);
        if (action.free_bits() >= 63 || action.action_count() > opt.orbit_limit) {
            ++rep.skipped;
            continue;
        }
        const auto orbit = enumerate_orbit(f, opt.orbit_limit);
        const auto expected = std::uint64_t{1} << (f.degree() + lambda_size(f));
        ++rep.checked;
        if (orbit.size() != expected)
            rep.fail(f.to_string() + ": orbit size " + std::to_string(orbit.size()) + ", expected "
                     + std::to_string(expected));
        const int w = 1 << (opt.m - f.degree());
        for (const auto& v : orbit)
            if (v.weight() != w) {
                rep.fail(f.to_string() + ": orbit element of weight " + std::to_string(v.weight()));
                break;
            }
    }
    return rep;
}

/// Measured collision exponent against the closed-form alpha.
inline SuiteReport verify_alpha(const VerifyOptions& opt)
{
    SuiteReport rep("alpha");
    const auto layer = monomials_of_degree(opt.m, 2);
    for (std::size_t i = 0; i < layer.size(); ++i)
        for (std::size_t j = i + 1; j < layer.size(); ++j) {
            const auto& f = layer[i];
            const auto& g = layer[j];
            if (f.mask() & g.mask())
                continue;
            int measured = 0;
            try {
                measured = measured_alpha(f, g, opt.orbit_limit << 2);
            } catch (const ResourceError&) {
                ++rep.skipped;
                continue;
            }
            ++rep.checked;
            if (measured != alpha(f, g))
                rep.fail(f.to_string() + "," + g.to_string() + ": measured " + std::to_string(measured)
                         + ", formula " + std::to_string(alpha(f, g)));
        }
    return rep;
}

/// Minkowski-sum cardinalities of every Type II tuple of R(2,m) and R(3,m).
inline SuiteReport verify_minkowski(const VerifyOptions& opt)
{
    SuiteReport rep("minkowski");
    for (int r = 2; r <= std::min(3, opt.m); ++r) {
        const auto set = monomials_up_to_degree(opt.m, r);
        for (int mu = 2; 2 * mu <= opt.m - r + 2; ++mu)
            for (const auto& t : enumerate_type_ii_tuples(set, mu)) {
                const auto predicted = predicted_minkowski_size(t.factors, t.h);
                if (predicted > BigInt(opt.orbit_limit << 2)) {
                    ++rep.skipped;
                    continue;
                }
                const auto sum = minkowski_sum_orbits(t.factors, t.h, opt.orbit_limit << 2);
                ++rep.checked;
                if (BigInt(sum.size()) != predicted)
                    rep.fail("h=" + t.h.to_string() + " tuple size " + std::to_string(sum.size())
                             + ", predicted " + predicted.str());
            }
    }
    return rep;
}

/// Disjointness of the Type II sums of R(2,m) and R(3,m), and completeness
/// of their union against the oracle's weight class at 1.5 w_min.
inline SuiteReport verify_disjoint(const VerifyOptions& opt)
{
    SuiteReport rep("disjoint");
    for (int r = 2; r <= 3 && 4 <= opt.m - r + 2; ++r) {
        const auto set = monomials_up_to_degree(opt.m, r);
        const auto tuples = enumerate_type_ii_tuples(set, 2);
        VectorSet seen;
        bool overflow = false;
        bool disjoint = true;
        for (const auto& t : tuples) {
            if (predicted_minkowski_size(t.factors, t.h) > BigInt(opt.orbit_limit << 2)) {
                overflow = true;
                break;
            }
            for (const auto& v : minkowski_sum_orbits(t.factors, t.h, opt.orbit_limit << 2))
                if (!seen.insert(v).second)
                    disjoint = false;
        }
        if (overflow) {
            ++rep.skipped;
            continue;
        }
        ++rep.checked;
        if (!disjoint)
            rep.fail("R(" + std::to_string(r) + "," + std::to_string(opt.m) + "): overlapping tuple sums");
        if (BigInt(seen.size()) != count_type_ii(set, 2))
            rep.fail("R(" + std::to_string(r) + "," + std::to_string(opt.m) + "): union size "
                     + std::to_string(seen.size()) + ", count " + count_type_ii(set, 2).str());
        if (set.size() > opt.max_k) {
            ++rep.skipped;
            continue;
        }
        const CodeSpec code(set);
        const auto w = type_ii_weight(opt.m, r, 2);
        const auto cls = weight_class(code, w, opt.max_k);
        ++rep.checked;
        bool complete = cls.size() == seen.size();
        for (std::size_t i = 0; complete && i < cls.size(); ++i)
            complete = seen.count(cls[i]) != 0;
        if (!complete)
            rep.fail("R(" + std::to_string(r) + "," + std::to_string(opt.m) + "): union differs from weight class "
                     + std::to_string(w) + " (" + std::to_string(cls.size()) + " codewords)");
    }
    return rep;
}

/// Complete closed-form distribution against the oracle for every decreasing
/// code between R(1,m) and R(2,m). Beyond `samples` codes a seeded subset is used.
inline SuiteReport verify_rm2_sweep(const VerifyOptions& opt)
{
    SuiteReport rep("rm2-sweep");
    auto ideals = layer_ideals(opt.m, 2);
    rep.notes.push_back(std::to_string(ideals.size()) + " codes between R(1," + std::to_string(opt.m) + ") and R(2,"
                        + std::to_string(opt.m) + ")");
    if (ideals.size() > opt.samples) {
        std::mt19937_64 rng(opt.seed);
        std::shuffle(ideals.begin(), ideals.end(), rng);
        ideals.resize(opt.samples);
        rep.notes.push_back("sampled " + std::to_string(opt.samples) + " with seed " + std::to_string(opt.seed));
    }
    const auto base = monomials_up_to_degree(opt.m, 1).members();
    for (const auto& ideal : ideals) {
        auto members = base;
        members.insert(members.end(), ideal.begin(), ideal.end());
        const MonomialSet set(opt.m, members);
        if (set.size() > opt.max_k) {
            ++rep.skipped;
            continue;
        }
        const auto closed = complete_wd_rm2_subcode(set);
        const auto brute = brute_force_wd(CodeSpec(set), {opt.max_k, opt.threads});
        ++rep.checked;
        if (!detail::same_distribution(closed, brute))
            rep.fail(detail::set_text(set) + ": closed form differs from oracle");
    }
    return rep;
}

/// Random decreasing sets of maximum degree 3: minimum-weight and mu = 2
/// Type II counts against the oracle.
inline SuiteReport verify_r3(const VerifyOptions& opt)
{
    SuiteReport rep("r3");
    if (opt.m < 4) {
        rep.fail("r3 suite needs m >= 4");
        return rep;
    }
    std::mt19937_64 rng(opt.seed);
    const auto deg3 = monomials_of_degree(opt.m, 3);
    const auto deg2 = monomials_of_degree(opt.m, 2);
    const auto deg1 = monomials_of_degree(opt.m, 1);
    std::set<std::vector<std::uint32_t>> seen;
    std::size_t attempts = 0;
    while (seen.size() < opt.random_sets && attempts < 200 * opt.random_sets) {
        ++attempts;
        std::vector<Monomial> gens;
        const auto pick = [&](const std::vector<Monomial>& pool, int count) {
            std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
            for (int i = 0; i < count; ++i)
                gens.push_back(pool[d(rng)]);
        };
        pick(deg3, 1 + static_cast<int>(rng() % 3));
        pick(deg2, static_cast<int>(rng() % 4));
        pick(deg1, static_cast<int>(rng() % 3));
        const auto set = decreasing_closure(opt.m, gens);
        if (set.max_degree() != 3 || set.size() > opt.max_k)
            continue;
        std::vector<std::uint32_t> key;
        for (const auto& f : set)
            key.push_back(f.mask());
        if (!seen.insert(key).second)
            continue;

        const CodeSpec code(set);
        const auto brute = brute_force_wd(code, {opt.max_k, opt.threads});
        const auto wmin = code.w_min();
        ++rep.checked;
        if (brute.count(wmin) != count_min_weight(set))
            rep.fail(detail::set_text(set) + ": w_min count " + count_min_weight(set).str() + ", oracle "
                     + brute.count(wmin).str());
        const auto w2 = type_ii_weight(opt.m, 3, 2);
        if (brute.count(w2) != count_type_ii(set, 2))
            rep.fail(detail::set_text(set) + ": 1.5 w_min count " + count_type_ii(set, 2).str() + ", oracle "
                     + brute.count(w2).str());
    }
    if (seen.size() < opt.random_sets)
        rep.fail("only " + std::to_string(seen.size()) + " distinct random sets fit within K <= "
                 + std::to_string(opt.max_k));
    return rep;
}

/// Level sizes of the degree-2 poset: floor((l+2)/2) rising to the middle,
/// palindromic, and a blended order that is nondecreasing in level.
inline SuiteReport verify_poset(const VerifyOptions& opt)
{
    SuiteReport rep("poset");
    const auto levels = poset_levels(opt.m);
    const int top = 2 * (opt.m - 2);
    std::string sizes;
    for (const auto& level : levels) {
        const int l = level.level;
        const int expected = (std::min(l, top - l) + 2) / 2;
        ++rep.checked;
        if (static_cast<int>(level.members.size()) != expected)
            rep.fail("level " + std::to_string(l) + " has " + std::to_string(level.members.size())
                     + " members, expected " + std::to_string(expected));
        sizes += (sizes.empty() ? "" : ",") + std::to_string(level.members.size());
    }
    rep.notes.push_back("level sizes " + sizes);
    const auto order = blended_order(opt.m);
    for (std::size_t i = 1; i < order.size(); ++i) {
        ++rep.checked;
        if (wmin_leq(order[i], order[i - 1]))
            rep.fail("blended order descends at " + order[i - 1].to_string() + ", " + order[i].to_string());
        else if (lambda_size(order[i]) == lambda_size(order[i - 1]) && BetaSum(order[i]) < BetaSum(order[i - 1]))
            rep.fail("beta order broken inside level at " + order[i - 1].to_string() + ", " + order[i].to_string());
    }
    return rep;
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"orbits", "alpha", "minkowski", "disjoint",
                                                "rm2-sweep", "r3", "poset"};
    return names;
}

inline SuiteReport run_suite(const std::string& name, const VerifyOptions& opt)
{
    check_variable_count(opt.m);
    if (name == "orbits")
        return verify_orbits(opt);
    if (name == "alpha")
        return verify_alpha(opt);
    if (name == "minkowski")
        return verify_minkowski(opt);
    if (name == "disjoint")
        return verify_disjoint(opt);
    if (name == "rm2-sweep")
        return verify_rm2_sweep(opt);
    if (name == "r3")
        return verify_r3(opt);
    if (name == "poset")
        return verify_poset(opt);
    throw InputError("unknown suite '" + name + "'");
}

} // namespace wdx
