#pragma once

#include <optional>
#include <string_view>

namespace kaonbell {

/// Two-particle basis whose interference term is damped by (1 - zeta).
enum class ZetaBasis { KsKl, K0K0bar };

const char* to_string(ZetaBasis basis);
std::optional<ZetaBasis> parse_zeta_basis(std::string_view text);

/// Decoherence model: zeta = 0 is quantum mechanics, zeta = 1 full factorization.
class ZetaModel {
 public:
  /// Throws InvalidInput unless zeta is in [0, 1].
  static ZetaModel make(ZetaBasis basis, double zeta);

  ZetaBasis basis() const { return basis_; }
  double zeta() const { return zeta_; }

 private:
  ZetaModel(ZetaBasis basis, double zeta) : basis_(basis), zeta_(zeta) {}

  ZetaBasis basis_;
  double zeta_;
};

}  // namespace kaonbell
