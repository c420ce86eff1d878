#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "merocusp/bigfloat.hpp"
#include "merocusp/lattice.hpp"
#include "merocusp/special_values.hpp"

namespace merocusp {

enum class Execution { serial, parallel };

// coefficient * v0^{-j} (4 pi m)^r sum_b C_K(b, m) N(b)^{j - K/2} e^{2 pi m v0 / N(b)}
struct SeriesTerm {
    int weight = 0;
    int j = 0;
    int r = 0;
    BigComplex coefficient;
};

// Per-ideal data reused across weights and m: e^{i phi} with
// C_K(b, m) = Re(e^{i m phi} t^K), the twist t, 1/N and e^{2 pi v0/N}.
class IdealTable {
public:
    IdealTable(Field field, long norm_bound, prec_t prec);

    // Shared, cached per (field, bound, precision); thread-safe.
    static std::shared_ptr<const IdealTable> get(Field field, long norm_bound, prec_t prec);

    Field field() const { return field_; }
    long norm_bound() const { return norm_bound_; }
    prec_t prec() const { return prec_; }
    const std::vector<PrimitiveIdeal>& ideals() const { return ideals_; }
    const BigComplex& phase(std::size_t i) const { return phase_[i]; }
    const BigComplex& twist(std::size_t i) const { return twist_[i]; }
    const BigReal& inv_norm(std::size_t i) const { return inv_norm_[i]; }
    const BigReal& growth(std::size_t i) const { return growth_[i]; }

private:
    Field field_;
    long norm_bound_;
    prec_t prec_;
    std::vector<PrimitiveIdeal> ideals_;
    std::vector<BigComplex> phase_;
    std::vector<BigComplex> twist_;
    std::vector<BigReal> inv_norm_;
    std::vector<BigReal> growth_;
};

// Heights v0 of i and rho as seen by the ideal sums.
BigReal field_height(Field field, prec_t prec);

// Sum of term(i) for i in [0, count).  The parallel path splits the range
// into fixed chunks, sums each chunk with compensation and combines chunks
// in index order, so its result does not depend on the thread count.
BigComplex ordered_sum(std::size_t count, prec_t prec, const std::function<BigComplex(std::size_t)>& term,
                       Execution mode);

inline constexpr std::size_t kReductionChunk = 64;

// Direct evaluation through c_kernel, one ideal at a time, in norm order.
BigComplex ideal_sum_reference(Field field, std::span<const PrimitiveIdeal> ideals,
                               std::span<const SeriesTerm> terms, long m, prec_t prec);
// Table-driven evaluation; Execution::parallel distributes chunks over OpenMP threads.
BigComplex ideal_sum(const IdealTable& table, std::span<const SeriesTerm> terms, long m, prec_t prec,
                     Execution mode = Execution::parallel);

// Bound on the omitted part (norms > norm_bound) of the sum above.
BigReal ideal_tail_bound(Field field, std::span<const SeriesTerm> terms, long m, long norm_bound, prec_t prec);

// s[B^{1-s}/(s-1) + 2 r B^{1/2-s}/(s-1/2) + r^2 B^{-s}/s] * area_factor, s > 1:
// bounds sum_{x_b > B} x_b^{-s} when #{b : x_b <= X} <= area_factor (sqrt X + r)^2.
BigReal lattice_tail(long s, long bound, const BigReal& r, const BigReal& area_factor);

}  // namespace merocusp
