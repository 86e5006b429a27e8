#pragma once

// Explicit lower-triangular affine orbits, enumerated as sets of evaluation
// vectors. Used to check orbit cardinalities, collision exponents and the
// disjointness of Minkowski sums on small instances.

#include "wdx/weight_enum.hpp"

#include <unordered_set>
#include <vector>

namespace wdx {

using VectorSet = std::unordered_set<EvaluationVector, EvaluationVectorHash>;

inline constexpr std::uint64_t kDefaultOrbitLimit = std::uint64_t{1} << 20;

/// Restricted affine actions on the variables of `target`, where each
/// variable x_i may absorb x_j for j < i, j not in `frozen`, plus a constant.
/// For the orbit of f itself, frozen = ind(f).
class RestrictedAffineAction {
public:
    RestrictedAffineAction(const Monomial& target, const Monomial& frozen) : target_(target)
    {
        detail::require_same_m(target, frozen, "RestrictedAffineAction");
        for (int i : target.indices()) {
            Slot slot{i, {}};
            for (int j = 0; j < i; ++j)
                if (!frozen.contains(j))
                    slot.free.push_back(j);
            bits_ += 1 + static_cast<int>(slot.free.size());
            slots_.push_back(std::move(slot));
        }
    }

    explicit RestrictedAffineAction(const Monomial& f) : RestrictedAffineAction(f, f) {}

    /// log2 of the number of distinct actions.
    int free_bits() const { return bits_; }
    std::uint64_t action_count() const { return std::uint64_t{1} << bits_; }
    const Monomial& target() const { return target_; }

    /// Evaluation of the product of affine forms selected by `action`, whose
    /// bits are consumed slot by slot: translation first, then coefficients.
    EvaluationVector apply(std::uint64_t action, const std::vector<EvaluationVector>& variables) const
    {
        EvaluationVector product = EvaluationVector::all_ones(target_.m());
        for (const auto& slot : slots_) {
            EvaluationVector form = variables[static_cast<std::size_t>(slot.index)];
            if (action & 1u)
                form ^= EvaluationVector::all_ones(target_.m());
            action >>= 1;
            for (int j : slot.free) {
                if (action & 1u)
                    form ^= variables[static_cast<std::size_t>(j)];
                action >>= 1;
            }
            product &= form;
        }
        return product;
    }

private:
    struct Slot {
        int index;
        std::vector<int> free;
    };
    Monomial target_;
    std::vector<Slot> slots_;
    int bits_ = 0;
};

namespace detail {

inline std::vector<EvaluationVector> variable_vectors(int m)
{
    std::vector<EvaluationVector> out;
    for (int i = 0; i < m; ++i)
        out.push_back(evaluate(Monomial(m, 1u << i)));
    return out;
}

inline void check_orbit_bound(std::uint64_t predicted, std::uint64_t limit, const std::string& what)
{
    if (predicted > limit)
        throw ResourceError(what + ": predicted size " + std::to_string(predicted) + " exceeds limit "
                            + std::to_string(limit));
}

} // namespace detail

/// Orbit of `target` under the actions that freeze ind(frozen).
inline VectorSet enumerate_restricted_orbit(const Monomial& target, const Monomial& frozen,
                                            std::uint64_t limit = kDefaultOrbitLimit)
{
    const RestrictedAffineAction action(target, frozen);
    if (action.free_bits() >= 63)
        throw ResourceError("orbit of " + target.to_string() + " is far too large to enumerate");
    detail::check_orbit_bound(action.action_count(), limit, "orbit of " + target.to_string());
    const auto vars = detail::variable_vectors(target.m());
    VectorSet out;
    out.reserve(static_cast<std::size_t>(action.action_count()));
    for (std::uint64_t a = 0; a < action.action_count(); ++a)
        out.insert(action.apply(a, vars));
    return out;
}

inline VectorSet enumerate_orbit(const Monomial& f, std::uint64_t limit = kDefaultOrbitLimit)
{
    return enumerate_restricted_orbit(f, f, limit);
}

/// { H * (F_1 + ... + F_mu) } with H in the orbit of h and F_i in the orbit
/// of f_i / h under the actions adapted to f_i. Each factor must be divisible by h.
inline VectorSet minkowski_sum_orbits(const std::vector<Monomial>& factors, const Monomial& h,
                                      std::uint64_t limit = std::uint64_t{1} << 22)
{
    if (factors.empty())
        throw InputError("minkowski_sum_orbits: no factors");
    std::uint64_t predicted = RestrictedAffineAction(h).action_count();
    std::vector<VectorSet> parts;
    for (const auto& f : factors) {
        const Monomial q = quotient(f, h);
        const RestrictedAffineAction a(q, f);
        if (a.free_bits() >= 40)
            throw ResourceError("minkowski_sum_orbits: factor orbit too large");
        predicted = predicted > limit ? predicted : predicted * a.action_count();
        detail::check_orbit_bound(predicted, limit, "Minkowski sum");
        parts.push_back(enumerate_restricted_orbit(q, f, limit));
    }

    VectorSet sums;
    sums.insert(EvaluationVector(h.m()));
    for (const auto& part : parts) {
        VectorSet next;
        next.reserve(sums.size() * part.size());
        for (const auto& s : sums)
            for (const auto& p : part)
                next.insert(s ^ p);
        sums = std::move(next);
    }
    if (h.is_one())
        return sums;

    const auto outer = enumerate_orbit(h, limit);
    VectorSet out;
    out.reserve(outer.size() * sums.size());
    for (const auto& hv : outer)
        for (const auto& s : sums)
            out.insert(hv & s);
    return out;
}

/// log2(|O_f| |O_g| / |O_f + O_g|) measured by enumeration.
inline int measured_alpha(const Monomial& f, const Monomial& g, std::uint64_t limit = std::uint64_t{1} << 22)
{
    if (f.degree() != 2 || g.degree() != 2 || (f.mask() & g.mask()))
        throw InputError("measured_alpha: expects coprime degree-2 monomials");
    const auto of = enumerate_orbit(f, limit).size();
    const auto og = enumerate_orbit(g, limit).size();
    const auto sum = minkowski_sum_orbits({f, g}, Monomial::one(f.m()), limit).size();
    const std::uint64_t product = std::uint64_t(of) * og;
    if (sum == 0 || product % sum != 0 || !std::has_single_bit(product / sum))
        throw ConsistencyError("measured_alpha: orbit size quotient " + std::to_string(product) + "/"
                               + std::to_string(sum) + " is not a power of two");
    return std::countr_zero(product / sum);
}

/// Closed-form size of the Minkowski sum set for a tuple.
inline BigInt predicted_minkowski_size(const std::vector<Monomial>& factors, const Monomial& h)
{
    int e = h.degree() + lambda_size(h);
    std::vector<Monomial> q;
    for (const auto& f : factors) {
        q.push_back(quotient(f, h));
        e += q.back().degree() + lambda_restricted_size(f, q.back());
    }
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
            e -= alpha(q[i], q[j]);
    return detail::exact_power_of_two(e, "Minkowski sum size");
}

/// True iff the Minkowski-sum sets of the tuples are pairwise disjoint.
inline bool verify_disjointness(const std::vector<TypeIITuple>& tuples,
                                std::uint64_t limit = std::uint64_t{1} << 22)
{
    VectorSet seen;
    for (const auto& t : tuples) {
        for (const auto& v : minkowski_sum_orbits(t.factors, t.h, limit))
            if (!seen.insert(v).second)
                return false;
    }
    return true;
}

} // namespace wdx
