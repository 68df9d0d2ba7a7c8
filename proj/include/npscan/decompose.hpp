#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "npscan/dickson.hpp"
#include "npscan/rational_poly.hpp"

namespace npscan {

/// g o h.
QPoly compose(const QPoly& g, const QPoly& h);

enum class FactorKind { Linear, Dickson, Other };

struct ChainFactor {
  QPoly poly;
  FactorKind kind = FactorKind::Other;
  std::optional<DicksonForm> dickson;
};

/// f = factors[0] o factors[1] o ... o factors.back(); every factor after the
/// first is monic with zero constant term.
struct CompositionChain {
  std::vector<ChainFactor> factors;
  QPoly recompose() const;
};

/// Monic (g, h) with deg h = s, h(0) = 0 and f = g o h, if one exists.
std::optional<std::pair<QPoly, QPoly>> right_factor(const QPoly& f, unsigned s);

/// Complete decomposition of a monic polynomial into indecomposable factors.
CompositionChain decompose(const QPoly& f);

}  // namespace npscan
