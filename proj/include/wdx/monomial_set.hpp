#pragma once

#include "wdx/beta.hpp"
#include "wdx/monomial.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wdx {

/// Finite set of monomials over a common m, held in canonical order.
class MonomialSet {
public:
    explicit MonomialSet(int m = 1) : m_(m), present_(std::size_t{1} << m, false)
    {
        check_variable_count(m);
    }

    MonomialSet(int m, const std::vector<Monomial>& members) : MonomialSet(m)
    {
        for (const auto& f : members) {
            if (f.m() != m)
                throw InputError("monomial " + f.to_string() + " has m=" + std::to_string(f.m())
                                 + ", set has m=" + std::to_string(m));
            if (!present_[f.mask()]) {
                present_[f.mask()] = true;
                members_.push_back(f);
            }
        }
        std::sort(members_.begin(), members_.end(), CanonicalLess{});
    }

    int m() const { return m_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(const Monomial& f) const { return f.m() == m_ && present_[f.mask()]; }
    bool contains_mask(std::uint32_t mask) const { return present_[mask]; }

    const std::vector<Monomial>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    /// Largest degree present; -1 for the empty set.
    int max_degree() const
    {
        int r = -1;
        for (const auto& f : members_)
            r = std::max(r, f.degree());
        return r;
    }

    /// Members of exactly the given degree, canonical order.
    std::vector<Monomial> layer(int degree) const
    {
        std::vector<Monomial> out;
        for (const auto& f : members_)
            if (f.degree() == degree)
                out.push_back(f);
        return out;
    }

    friend bool operator==(const MonomialSet& a, const MonomialSet& b)
    {
        return a.m_ == b.m_ && a.present_ == b.present_;
    }

private:
    int m_;
    std::vector<bool> present_;
    std::vector<Monomial> members_;
};

/// Immediate predecessors of f under the order: drop one variable, or lower
/// one index by one when the lower index is unused. Every g strictly below f
/// is reachable through a chain of such steps.
inline std::vector<Monomial> immediate_predecessors(const Monomial& f)
{
    std::vector<Monomial> out;
    for (int i : f.indices()) {
        out.emplace_back(f.m(), f.mask() & ~(1u << i));
        if (i > 0 && !f.contains(i - 1))
            out.emplace_back(f.m(), (f.mask() & ~(1u << i)) | (1u << (i - 1)));
    }
    return out;
}

/// A member f and a predecessor g of f missing from the set, if any.
inline std::optional<std::pair<Monomial, Monomial>> decreasing_violation(const MonomialSet& set)
{
    for (const auto& f : set)
        for (const auto& g : immediate_predecessors(f))
            if (!set.contains(g))
                return std::make_pair(f, g);
    return std::nullopt;
}

inline bool is_decreasing(const MonomialSet& set) { return !decreasing_violation(set); }

inline std::string decreasing_diagnostic(const MonomialSet& set)
{
    const auto v = decreasing_violation(set);
    return v ? "monomial set is not decreasing: " + v->first.to_string() + " is present but " + v->second.to_string()
                   + " is missing"
             : std::string("monomial set is decreasing");
}

/// Smallest decreasing set containing the generators.
inline MonomialSet decreasing_closure(const MonomialSet& generators)
{
    const int m = generators.m();
    std::vector<bool> seen(std::size_t{1} << m, false);
    std::deque<Monomial> queue;
    for (const auto& g : generators) {
        if (!seen[g.mask()]) {
            seen[g.mask()] = true;
            queue.push_back(g);
        }
    }
    std::vector<Monomial> out;
    while (!queue.empty()) {
        const Monomial f = queue.front();
        queue.pop_front();
        out.push_back(f);
        for (const auto& g : immediate_predecessors(f)) {
            if (!seen[g.mask()]) {
                seen[g.mask()] = true;
                queue.push_back(g);
            }
        }
    }
    return MonomialSet(m, out);
}

inline MonomialSet decreasing_closure(int m, const std::vector<Monomial>& generators)
{
    return decreasing_closure(MonomialSet(m, generators));
}

/// All monomials of degree <= r.
inline MonomialSet monomials_up_to_degree(int m, int r)
{
    std::vector<Monomial> out;
    for (const auto& f : all_monomials(m))
        if (f.degree() <= r)
            out.push_back(f);
    return MonomialSet(m, out);
}

} // namespace wdx
