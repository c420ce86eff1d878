#include "merocusp/kernels.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <tuple>

#include "merocusp/error.hpp"

namespace merocusp {

BigReal field_height(Field field, prec_t prec) {
    if (field == Field::gaussian) return BigReal(1L, prec);
    return sqrt(BigReal(3L, prec)) / 2;
}

IdealTable::IdealTable(Field field, long norm_bound, prec_t prec)
    : field_(field), norm_bound_(norm_bound), prec_(prec), ideals_(enumerate_primitive(field, norm_bound)) {
    const std::size_t n = ideals_.size();
    phase_.assign(n, BigComplex(prec));
    twist_.assign(n, BigComplex(prec));
    inv_norm_.assign(n, BigReal(prec));
    growth_.assign(n, BigReal(prec));
    const BigReal p = pi(prec);
    const BigReal s3 = sqrt(BigReal(3L, prec));
    const BigReal v0 = field_height(field, prec);
    const BigReal one(1L, prec);

#pragma omp parallel for schedule(dynamic, 64)
    for (std::size_t i = 0; i < n; ++i) {
        const auto& id = ideals_[i];
        BigReal theta(prec), phi(prec);
        if (field == Field::gaussian) {
            theta = id.d == 0 ? p * (id.c > 0 ? 1 : -1) / 2 : atan(BigReal(id.c, prec) / BigReal(id.d, prec));
            phi = 2L * p * BigReal(id.a * id.c + id.b * id.d, prec) / id.norm;
        } else {
            long den = 2 * id.d + id.c;
            theta = den == 0 ? p * (id.c > 0 ? 1 : -1) / 2 : atan(BigReal(id.c, prec) * s3 / den);
            theta = -theta;
            long x = -id.a * id.d - id.b * id.c - 2 * id.a * id.c - 2 * id.b * id.d;
            phi = p * BigReal(x, prec) / id.norm;
        }
        phase_[i] = BigComplex::polar(one, phi);
        twist_[i] = BigComplex::polar(one, theta);
        inv_norm_[i] = one / id.norm;
        growth_[i] = exp(2L * p * v0 / id.norm);
    }
}

std::shared_ptr<const IdealTable> IdealTable::get(Field field, long norm_bound, prec_t prec) {
    static std::mutex mu;
    static std::map<std::tuple<int, long, prec_t>, std::shared_ptr<const IdealTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(static_cast<int>(field), norm_bound, prec);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto table = std::make_shared<const IdealTable>(field, norm_bound, prec);
    cache.emplace(key, table);
    return table;
}

BigComplex ordered_sum(std::size_t count, prec_t prec, const std::function<BigComplex(std::size_t)>& term,
                       Execution mode) {
    if (mode == Execution::serial) {
        KahanSum sum(prec);
        for (std::size_t i = 0; i < count; ++i) sum.add(term(i));
        return sum.value();
    }
    const std::size_t chunks = (count + kReductionChunk - 1) / kReductionChunk;
    std::vector<BigComplex> partial(chunks, BigComplex(prec));
    std::exception_ptr failure;
    std::mutex failure_mu;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t c = 0; c < chunks; ++c) {
        try {
            KahanSum sum(prec);
            std::size_t end = std::min(count, (c + 1) * kReductionChunk);
            for (std::size_t i = c * kReductionChunk; i < end; ++i) sum.add(term(i));
            partial[c] = sum.value();
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mu);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    KahanSum total(prec);
    for (const auto& p : partial) total.add(p);
    return total.value();
}

namespace {

bool kernel_vanishes(Field field, int weight) { return weight % (field == Field::gaussian ? 4 : 6) != 0; }

struct PreparedTerm {
    int weight;
    long s;
    BigComplex coefficient;  // includes v0^{-j} (4 pi m)^r
};

std::vector<PreparedTerm> prepare(Field field, std::span<const SeriesTerm> terms, long m, prec_t w) {
    std::vector<PreparedTerm> out;
    const BigReal v0 = field_height(field, w);
    const BigReal four_pi_m = 4L * pi(w) * m;
    for (const auto& t : terms) {
        if (t.weight % 2 != 0 || t.j < 0 || t.r < 0) throw DomainError("bad series term");
        long s = t.weight / 2 - t.j;
        if (s <= 1) throw DomainError("nonconvergent parameter regime");
        if (kernel_vanishes(field, t.weight) || t.coefficient.is_zero()) continue;
        if (m == 0 && t.r > 0) continue;
        BigComplex c = round_to(t.coefficient, w) * pow(v0, -static_cast<long>(t.j));
        if (t.r > 0) c = c * pow(four_pi_m, t.r);
        out.push_back({t.weight, s, std::move(c)});
    }
    return out;
}

}  // namespace

BigComplex ideal_sum_reference(Field field, std::span<const PrimitiveIdeal> ideals,
                               std::span<const SeriesTerm> terms, long m, prec_t prec) {
    const prec_t w = prec + 32;
    auto prepared = prepare(field, terms, m, w);
    const BigReal two_pi_v0_m = 2L * pi(w) * field_height(field, w) * m;
    KahanSum sum(w);
    if (prepared.empty()) return BigComplex(prec);
    for (const auto& id : ideals) {
        BigReal growth = exp(two_pi_v0_m / id.norm);
        for (const auto& t : prepared) {
            BigReal c = c_kernel(field, t.weight, id, m, w);
            BigReal decay = pow(BigReal(id.norm, w), -t.s);
            sum.add(t.coefficient * (c * decay * growth));
        }
    }
    return round_to(sum.value(), prec);
}

BigComplex ideal_sum(const IdealTable& table, std::span<const SeriesTerm> terms, long m, prec_t prec,
                     Execution mode) {
    const prec_t w = std::min(table.prec(), prec + 32);
    auto prepared = prepare(table.field(), terms, m, w);
    if (prepared.empty()) return BigComplex(prec);
    std::vector<int> weights;
    for (const auto& t : prepared)
        if (std::find(weights.begin(), weights.end(), t.weight) == weights.end()) weights.push_back(t.weight);

    auto term = [&](std::size_t i) {
        BigComplex u = pow(round_to(table.phase(i), w), m);
        BigReal growth = pow(BigReal(table.growth(i), w), m);
        BigComplex tw = round_to(table.twist(i), w);
        BigReal inv = BigReal(table.inv_norm(i), w);
        std::vector<BigReal> kernel;
        kernel.reserve(weights.size());
        for (int k : weights) {
            BigComplex tk = pow(tw, k);
            kernel.push_back(u.re * tk.re - u.im * tk.im);
        }
        BigComplex acc(w);
        for (const auto& t : prepared) {
            std::size_t idx = std::find(weights.begin(), weights.end(), t.weight) - weights.begin();
            acc += t.coefficient * (kernel[idx] * pow(inv, t.s));
        }
        return acc * growth;
    };
    return round_to(ordered_sum(table.ideals().size(), w, term, mode), prec);
}

BigReal lattice_tail(long s, long bound, const BigReal& r, const BigReal& area_factor) {
    if (s <= 1) throw DomainError("nonconvergent parameter regime");
    const prec_t w = area_factor.prec();
    BigReal b(bound, w);
    BigReal half_s = BigReal(2 * s - 1, w) / 2;
    BigReal t1 = pow(b, 1 - s) / (s - 1);
    BigReal t2 = 2L * r * pow(b, BigReal(1L, w) / 2 - BigReal(s, w)) / half_s;
    BigReal t3 = r * r * pow(b, -s) / s;
    return area_factor * BigReal(s, w) * (t1 + t2 + t3);
}

BigReal ideal_tail_bound(Field field, std::span<const SeriesTerm> terms, long m, long norm_bound, prec_t prec) {
    const prec_t w = prec + 32;
    const BigReal p = pi(w);
    BigReal r(w), area(w);
    if (field == Field::gaussian) {
        r = BigReal(1L, w) / sqrt(BigReal(2L, w));
        area = p / 4;
    } else {
        r = BigReal(1L, w) / sqrt(BigReal(3L, w));
        area = p / (3L * sqrt(BigReal(3L, w)));
    }
    const BigReal v0 = field_height(field, w);
    const BigReal growth = exp(2L * p * v0 * m / norm_bound);
    BigReal total(0L, w);
    for (const auto& t : prepare(field, terms, m, w))
        total += t.coefficient.abs() * growth * lattice_tail(t.s, norm_bound, r, area);
    return round_to(total, prec);
}

}  // namespace merocusp
