#include "egmc/security.hpp"

#include <cmath>
#include <sstream>

#include "egmc/errors.hpp"
#include "egmc/pke.hpp"

namespace egmc {

double cost_structural(const EgmcParams& p) {
    return (double(p.m) * p.l1 + double(p.k + 1) * p.l2) * std::log2(double(p.q));
}

namespace {

double kernel_bits_raw(std::uint32_t q, std::uint32_t rows, std::uint32_t K, std::uint32_t r) {
    const double guesses = double(r) * std::ceil(double(K) / rows) * std::log2(double(q));
    return guesses + 2.0 * std::log2(double(K));
}

}  // namespace

std::uint32_t cost_kernel(const EgmcParams& p) {
    return std::uint32_t(std::ceil(kernel_bits_raw(p.q, p.m + p.l1, p.code_dim(), p.r)));
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r /= BigInt(i);
    }
    return r;
}

double log2_big(const BigInt& v) {
    if (v <= 0) throw parameter_error("log2 of a non-positive value");
    const std::size_t bits = boost::multiprecision::msb(v);
    if (bits <= 900) return std::log2(v.convert_to<double>());
    const BigInt shifted = v >> (bits - 52);
    return double(bits - 52) + std::log2(shifted.convert_to<double>());
}

SupportMinorsCounts support_minors_counts(std::uint32_t n, std::uint32_t k, std::uint32_t r,
                                          std::uint32_t b) {
    SupportMinorsCounts c{0, 0};
    c.m_b = binomial(n, r) * binomial(std::uint64_t(k) + b - 1, b);
    for (std::uint32_t i = 1; i <= b; ++i) {
        BigInt term = binomial(n, std::uint64_t(r) + i) *
                      binomial(std::uint64_t(k) + b - i - 1, b - i) *
                      binomial(std::uint64_t(k) + i - 1, i);
        c.n_b += (i % 2 == 1) ? term : -term;
    }
    return c;
}

namespace {

/// b-scan of the support-minors estimate for one instance; the equation
/// count carries the row binomial C(rows+i-1, i).
std::optional<std::pair<double, std::uint32_t>> sm_scan(std::uint32_t rows, std::uint32_t cols,
                                                        std::uint32_t K, std::uint32_t r,
                                                        double omega, std::uint32_t b_max) {
    if (K < 1 || cols <= r) return std::nullopt;
    std::optional<std::pair<double, std::uint32_t>> best;
    std::uint32_t first_ok = 0;
    for (std::uint32_t b = 1; b <= b_max; ++b) {
        if (first_ok && b > first_ok + 5) break;
        BigInt m_b = binomial(cols, r) * binomial(std::uint64_t(K) + b - 1, b);
        BigInt n_b = 0;
        for (std::uint32_t i = 1; i <= b; ++i) {
            BigInt term = binomial(cols, std::uint64_t(r) + i) *
                          binomial(std::uint64_t(rows) + i - 1, i) *
                          binomial(std::uint64_t(K) + b - i - 1, b - i);
            n_b += (i % 2 == 1) ? term : -term;
        }
        if (n_b <= 0 || m_b > n_b) continue;
        if (!first_ok) first_ok = b;
        const double cost = log2_big(n_b) + (omega - 1.0) * log2_big(m_b);
        if (!best || cost < best->first) best = {cost, b};
    }
    return best;
}

}  // namespace

std::optional<SmCost> cost_support_minors(const EgmcParams& p, double omega, std::uint32_t b_max,
                                          bool allow_guessing) {
    const std::uint32_t rows = p.m + p.l1, cols = p.m + p.l2, K = p.code_dim();
    const double lg = std::log2(double(p.q));
    std::optional<SmCost> best;
    const std::uint32_t a_max = allow_guessing ? (K - 1) / rows : 0;
    for (std::uint32_t a = 0; a <= a_max; ++a) {
        if (cols <= a) break;
        auto s = sm_scan(rows, cols - a, K - a * rows, p.r, omega, b_max);
        if (!s) continue;
        const double cost = double(a) * p.r * lg + s->first;
        if (!best || cost < best->bits) best = SmCost{cost, s->second, a};
    }
    return best;
}

BaseEstimator kernel_base_estimator() {
    return [](std::uint32_t q, std::uint32_t rows, std::uint32_t /*cols*/, std::uint32_t K,
              std::uint32_t r) -> std::optional<double> {
        if (K < 1) return std::nullopt;
        return kernel_bits_raw(q, rows, K, r);
    };
}

BaseEstimator support_minors_base_estimator(double omega, std::uint32_t b_max) {
    return [omega, b_max](std::uint32_t /*q*/, std::uint32_t rows, std::uint32_t cols,
                          std::uint32_t K, std::uint32_t r) -> std::optional<double> {
        auto s = sm_scan(rows, cols, K, r, omega, b_max);
        if (!s) return std::nullopt;
        return s->first;
    };
}

HybridCost cost_hybrid(const EgmcParams& p, const BaseEstimator& base) {
    const std::uint32_t rows = p.m + p.l1, cols = p.m + p.l2, K = p.code_dim();
    const double lg = std::log2(double(p.q));
    std::optional<HybridCost> best;
    for (std::uint32_t a = 0; a * rows < K && a < cols; ++a) {
        auto c = base(p.q, rows, cols - a, K - a * rows, p.r);
        if (!c) continue;
        const double cost = double(a) * p.r * lg + *c;
        if (!best || cost < best->bits) best = HybridCost{cost, a};
    }
    if (!best) throw parameter_error("no admissible sub-instance for the hybrid attack");
    return *best;
}

HybridCost cost_hybrid(const EgmcParams& p) {
    const auto kernel = kernel_base_estimator();
    const auto sm = support_minors_base_estimator();
    return cost_hybrid(p, [&](std::uint32_t q, std::uint32_t rows, std::uint32_t cols,
                              std::uint32_t K, std::uint32_t r) -> std::optional<double> {
        auto a = kernel(q, rows, cols, K, r);
        auto b = sm(q, rows, cols, K, r);
        if (a && b) return std::min(*a, *b);
        return a ? a : b;
    });
}

BigInt gaussian_binomial(std::uint32_t m, std::uint32_t j, std::uint32_t q) {
    if (j > m) return 0;
    BigInt num = 1, den = 1;
    const BigInt Q = q;
    for (std::uint32_t i = 0; i < j; ++i) {
        num *= boost::multiprecision::pow(Q, m - i) - 1;
        den *= boost::multiprecision::pow(Q, i + 1) - 1;
    }
    return num / den;
}

MrdQuantities mrd_quantities(const EgmcParams& p) {
    MrdQuantities out{};
    out.d0 = p.m - p.k + 1 + p.l2 + (p.k * p.l1) / (p.m + p.l1);
    const double lg = std::log2(double(p.q));
    const BigInt gb = gaussian_binomial(p.m, p.m - p.k + 1, p.q);
    const BigInt qm1 = boost::multiprecision::pow(BigInt(p.q), p.m) - 1;
    const double exp_tail = (double(p.l1 + 1) * (1.0 - double(p.k)) - 1.0) * lg;
    out.log2_count_exact = log2_big(gb) + log2_big(qm1) + exp_tail;
    out.log2_count_approx =
        (double(p.m) + double(p.m - p.k - p.l1) * (double(p.k) - 1.0) - 1.0) * lg;
    return out;
}

std::optional<std::int64_t> dual_attack_threshold(const EgmcParams& p) {
    // b < ((k + 1 - l2) m - n l1 - l1 l2) / m, exact over the integers
    const std::int64_t num = (std::int64_t(p.k) + 1 - std::int64_t(p.l2)) * p.m -
                             std::int64_t(p.n) * p.l1 - std::int64_t(p.l1) * p.l2;
    std::int64_t b = num / std::int64_t(p.m);
    if (std::int64_t(b) * p.m >= num) --b;  // strict inequality
    if (b < 0) return std::nullopt;
    return b;
}

AttackCostReport estimate_attacks(const EgmcParams& p) {
    AttackCostReport r{};
    r.structural_bits = cost_structural(p);
    r.kernel_bits = cost_kernel(p);
    auto sm = cost_support_minors(p);
    if (!sm) throw parameter_error("support-minors estimator inapplicable");
    r.support_minors_bits = sm->bits;
    r.b_opt = sm->b_opt;
    r.a_opt = sm->a_opt;
    auto hyb = cost_hybrid(p);
    r.hybrid_bits = hyb.bits;
    r.hybrid_a_opt = hyb.a_opt;
    return r;
}

// --- named parameter registry ----------------------------------------------

namespace {

EgmcParams make_params(std::uint32_t q, std::uint32_t k, std::uint32_t m, std::uint32_t l1,
                       std::uint32_t l2, std::uint32_t r) {
    EgmcParams p;
    p.q = q;
    p.m = m;
    p.n = m;
    p.k = k;
    p.l1 = l1;
    p.l2 = l2;
    p.r = r;
    return p;
}

}  // namespace

const std::vector<ParameterSet>& registry() {
    static const std::vector<ParameterSet> sets = {
        // reference table (l1 = l2 or close, q = 2)
        {"egmc128a", 128, true, make_params(2, 35, 43, 2, 2, 4), 158, 145, 158, 158, 98, 65},
        {"egmc128b", 128, true, make_params(2, 17, 37, 3, 3, 10), 193, 170, 179, 165, 76, 121},
        {"egmc128c", 128, true, make_params(2, 25, 37, 3, 3, 6), 168, 150, 164, 189, 78, 84},
        {"egmc128d", 128, true, make_params(2, 47, 53, 2, 2, 3), 158, 147, 161, 202, 166, 66},
        {"egmc192a", 192, true, make_params(2, 51, 59, 2, 2, 4), 222, 209, 224, 222, 268, 89},
        {"egmc256a", 256, true, make_params(2, 23, 47, 3, 3, 12), 302, 271, 285, 284, 191, 177},
        {"egmc256b", 256, true, make_params(2, 37, 53, 3, 2, 8), 315, 290, 310, 273, 274, 139},
        {"egmc256c", 256, true, make_params(2, 71, 79, 2, 2, 4), 303, 289, 305, 302, 667, 119},
        // alternative table (l1 = 0 or l2 = 0, or q = 16)
        {"egmc128e", 128, false, make_params(2, 17, 37, 4, 0, 10), 181, 168, 179, 148, 70, 111},
        {"egmc128f", 128, false, make_params(16, 13, 23, 1, 1, 5), 236, 273, 282, 148, 41, 138},
        {"egmc128g", 128, false, make_params(16, 7, 23, 0, 5, 8), 172, 262, 276, 160, 33, 207},
        {"egmc192b", 192, false, make_params(2, 23, 43, 5, 0, 10), 239, 220, 230, 215, 133, 134},
        {"egmc192c", 192, false, make_params(2, 33, 47, 5, 0, 7), 238, 221, 232, 235, 173, 111},
        {"egmc192d", 192, false, make_params(2, 41, 53, 4, 0, 6), 258, 240, 257, 212, 230, 106},
        {"egmc256d", 256, false, make_params(16, 9, 29, 2, 1, 10), 310, 373, 382, 272, 87, 334},
        {"egmc256e", 256, false, make_params(16, 17, 29, 2, 1, 8), 357, 399, 408, 304, 107, 218},
    };
    return sets;
}

std::optional<ParameterSet> find_parameter_set(const std::string& name) {
    for (const auto& s : registry())
        if (s.name == name) return s;
    return std::nullopt;
}

std::vector<RegistryRow> registry_report() {
    std::vector<RegistryRow> rows;
    rows.reserve(registry().size());
    for (const auto& s : registry()) {
        RegistryRow row{s, estimate_attacks(s.params), 0, 0, 0, 0};
        const EgmcParams& p = s.params;
        const std::uint64_t red = std::uint64_t(p.ambient_dim()) - p.code_dim();
        const std::uint64_t lg = BaseField(p.q).bits_per_elem();
        row.pk_bits = std::uint64_t(p.code_dim()) * red * lg;
        row.ct_bits = red * lg;
        row.pk_bytes = nied_public_key_payload_bytes(p);
        row.ct_bytes = nied_ciphertext_payload_bytes(p);
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string fmt_bits(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

}  // namespace

std::string registry_table_text() {
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof line, "%-10s %3s %3s %3s %3s %3s %3s %8s %8s %6s %7s %10s %6s\n",
                  "name", "q", "k", "m", "l1", "l2", "r", "Alg", "Hyb", "Comb", "Struc",
                  "pk_bytes", "ct_B");
    os << line;
    for (const auto& row : registry_report()) {
        const EgmcParams& p = row.set.params;
        std::snprintf(line, sizeof line,
                      "%-10s %3u %3u %3u %3u %3u %3u %8s %8s %6u %7.0f %10llu %6llu\n",
                      row.set.name.c_str(), p.q, p.k, p.m, p.l1, p.l2, p.r,
                      fmt_bits(row.costs.support_minors_bits).c_str(),
                      fmt_bits(row.costs.hybrid_bits).c_str(), row.costs.kernel_bits,
                      row.costs.structural_bits, (unsigned long long)row.pk_bytes,
                      (unsigned long long)row.ct_bytes);
        os << line;
    }
    return os.str();
}

std::string registry_table_csv() {
    std::ostringstream os;
    os << "name,q,k,m,l1,l2,r,Alg,Hyb,Comb,Struc,pk_bytes,ct_bytes\n";
    for (const auto& row : registry_report()) {
        const EgmcParams& p = row.set.params;
        os << row.set.name << ',' << p.q << ',' << p.k << ',' << p.m << ',' << p.l1 << ',' << p.l2
           << ',' << p.r << ',' << fmt_bits(row.costs.support_minors_bits) << ','
           << fmt_bits(row.costs.hybrid_bits) << ',' << row.costs.kernel_bits << ','
           << fmt_bits(row.costs.structural_bits) << ',' << row.pk_bytes << ',' << row.ct_bytes
           << '\n';
    }
    return os.str();
}

}  // namespace egmc
