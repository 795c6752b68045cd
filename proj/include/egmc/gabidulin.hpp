#ifndef EGMC_GABIDULIN_HPP
#define EGMC_GABIDULIN_HPP

#include <cstdint>
#include <vector>

#include "egmc/gf.hpp"
#include "egmc/linalg.hpp"
#include "egmc/qpoly.hpp"
#include "egmc/rng.hpp"

namespace egmc {

/// Evaluations of linearized polynomials of q-degree < k at n independent
/// points of F_{q^m}; decodable up to floor((n-k)/2) rank errors.
class GabidulinCode {
  public:
    /// g entries must be F_q-linearly independent, k <= n <= m.
    GabidulinCode(const ExtField& ext, std::uint32_t n, std::uint32_t k, std::vector<ExtElem> g);

    static GabidulinCode random(const ExtField& ext, std::uint32_t n, std::uint32_t k, Rng& rng);

    const ExtField& field() const { return ext_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t capacity() const { return (n_ - k_) / 2; }
    const std::vector<ExtElem>& eval_points() const { return g_; }

    /// k x n generator: row i = entrywise q^i-power of g.
    MatExt generator() const;

    std::vector<ExtElem> encode(const std::vector<ExtElem>& message) const;

    struct Decoded {
        std::vector<ExtElem> message;
        std::vector<ExtElem> error;
    };

    /// Bounded-distance decoding: splits y = c + e with wrank(e) <= capacity.
    /// Throws decoding_failure when no such codeword exists.
    Decoded decode(const std::vector<ExtElem>& y) const;

  private:
    ExtField ext_;
    std::uint32_t n_, k_;
    std::vector<ExtElem> g_;
};

}  // namespace egmc

#endif
