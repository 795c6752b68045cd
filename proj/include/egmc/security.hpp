#ifndef EGMC_SECURITY_HPP
#define EGMC_SECURITY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "egmc/egmc.hpp"

namespace egmc {

using BigInt = boost::multiprecision::cpp_int;

/// Attack-cost estimators, all returning log2 of the operation count.
/// Message recovery is a rank-r combination-finding instance with matrices
/// of size (m+l1) x (m+l2) and K = k*m generators; the estimators below are
/// evaluated on that instance.

/// Exponent of the row/column-projection structural distinguisher:
/// (m*l1 + (k+1)*l2) * log2(q).  Zero means a polynomial-time distinguisher.
double cost_structural(const EgmcParams& p);

/// Kernel-guessing attack, ceil(r * ceil(K/(m+l1)) * log2 q + w * log2 K)
/// with the linear-algebra exponent w fixed to 2.
std::uint32_t cost_kernel(const EgmcParams& p);

BigInt binomial(std::uint64_t n, std::uint64_t k);
double log2_big(const BigInt& v);

/// Equation/monomial counts of the minors-of-the-support modeling at
/// Macaulay degree b, in the three-parameter form (n, k, r):
///   M_b = C(n,r) C(k+b-1,b)
///   N_b = sum_i (-1)^(i+1) C(n,r+i) C(k+b-i-1,b-i) C(k+i-1,i)
struct SupportMinorsCounts {
    BigInt n_b;
    BigInt m_b;
};
SupportMinorsCounts support_minors_counts(std::uint32_t n, std::uint32_t k, std::uint32_t r,
                                          std::uint32_t b);

struct SmCost {
    double bits;
    std::uint32_t b_opt;
    std::uint32_t a_opt;  // kernel-vector guesses folded into the estimate
};

/// Support-minors estimator.  The equation count used for solvability
/// replaces the middle binomial of the published three-parameter form by
/// C(rows+i-1, i): with the published form N_1/M_1 >= C(n,r+1)/C(n,r) > 1
/// for every instance, which would make degree b = 1 always sufficient and
/// the estimate meaningless.  Guessing a kernel vectors (cost a*r*log2 q,
/// shrinking the instance by a*rows generators and a columns) is part of
/// the minimization; pass allow_guessing = false for the plain b-scan.
std::optional<SmCost> cost_support_minors(const EgmcParams& p, double omega = 2.0,
                                          std::uint32_t b_max = 80, bool allow_guessing = true);

struct HybridCost {
    double bits;
    std::uint32_t a_opt;
};

/// Cost of one sub-instance with K generators left after guessing; columns
/// already reduced.  Returns nullopt when the estimator does not apply.
using BaseEstimator = std::function<std::optional<double>(
    std::uint32_t q, std::uint32_t rows, std::uint32_t cols, std::uint32_t K, std::uint32_t r)>;

/// Guessing hybrid: min over a >= 0 of a*r*log2 q + base(sub-instance),
/// stopping once K - a*rows <= 0.  The default base takes the cheaper of
/// the kernel attack and the plain support-minors estimate, which keeps
/// hybrid <= support_minors.
HybridCost cost_hybrid(const EgmcParams& p, const BaseEstimator& base);
HybridCost cost_hybrid(const EgmcParams& p);

BaseEstimator kernel_base_estimator();
BaseEstimator support_minors_base_estimator(double omega = 2.0, std::uint32_t b_max = 80);

struct MrdQuantities {
    std::uint32_t d0;          // masked-code distance bound
    double log2_count_exact;   // log2 of the guaranteed weight-(d0-1) count
    double log2_count_approx;  // the closed-form exponent, in bits
};
MrdQuantities mrd_quantities(const EgmcParams& p);

BigInt gaussian_binomial(std::uint32_t m, std::uint32_t j, std::uint32_t q);

/// Largest degree b admissible for the dual-side product distinguisher:
/// b < k + 1 - (n/m) l1 - l2 - l1 l2 / m.  nullopt when no b >= 0 works.
std::optional<std::int64_t> dual_attack_threshold(const EgmcParams& p);

struct AttackCostReport {
    double structural_bits;
    std::uint32_t kernel_bits;
    double hybrid_bits;
    double support_minors_bits;
    std::uint32_t b_opt;
    std::uint32_t a_opt;         // guesses inside the support-minors figure
    std::uint32_t hybrid_a_opt;
};
AttackCostReport estimate_attacks(const EgmcParams& p);

// --- named parameter registry ----------------------------------------------

struct ParameterSet {
    std::string name;
    std::uint32_t security_level;  // 128 / 192 / 256
    bool main_table;               // reference rows vs l1=0 / l2=0 / q>2 rows
    EgmcParams params;
    // published reference columns
    std::uint32_t ref_alg, ref_hyb, ref_comb, ref_struc;
    std::uint32_t ref_pk_kb, ref_ct_b;
};

const std::vector<ParameterSet>& registry();
std::optional<ParameterSet> find_parameter_set(const std::string& name);

struct RegistryRow {
    ParameterSet set;
    AttackCostReport costs;
    std::uint64_t pk_bits, ct_bits;
    std::uint64_t pk_bytes, ct_bytes;  // exact byte counts (ceil)
};
std::vector<RegistryRow> registry_report();

/// Aligned text table of the recomputed registry; deterministic.
std::string registry_table_text();
/// name,q,k,m,l1,l2,r,Alg,Hyb,Comb,Struc,pk_bytes,ct_bytes
std::string registry_table_csv();

}  // namespace egmc

#endif
