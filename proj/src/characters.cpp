#include "sp4/characters.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace sp4 {

Complex TorusElement::character(const Weight& m) const {
  double phase = m[0] * th1 + m[1] * th2;
  return {std::cos(phase), std::sin(phase)};
}

bool is_regular(const Weight& mu) {
  return mu[0] != 0 && mu[1] != 0 && mu[0] != mu[1] && mu[0] != -mu[1];
}

HCParameter::HCParameter(Weight mu_, Weight xi_, Weight rho_h_)
    : mu(mu_), xi(xi_), rho_h(rho_h_) {
  if (!is_regular(mu))
    throw std::invalid_argument("HCParameter: weight must be regular (off all root walls)");
}

KappaCharacter::KappaCharacter(int r, unsigned dual) : rank(r), dual_mask(dual) {
  if (r < 0 || r > 2) throw std::invalid_argument("KappaCharacter: rank must be 0, 1 or 2");
  if (dual >= (1u << r)) throw std::invalid_argument("KappaCharacter: dual mask out of range");
}

int KappaCharacter::operator()(unsigned element) const {
  if (element >= (1u << rank))
    throw std::invalid_argument("KappaCharacter: element out of range");
  return std::popcount(dual_mask & element) % 2 == 0 ? 1 : -1;
}

const std::vector<WeylElement>& even_weyl() {
  static const std::vector<WeylElement> evens = [] {
    std::vector<WeylElement> out;
    // identity first, then the rotation generator, its square (the long
    // element) and cube
    Eigen::Matrix2i rot;
    rot << 0, 1, -1, 0;
    WeylElement r{rot};
    out.push_back(weyl_identity());
    out.push_back(r);
    out.push_back(r.compose(r));
    out.push_back(r.compose(r).compose(r));
    return out;
  }();
  return evens;
}

WeylLabeling WeylLabeling::standard() { return {{0u, 2u, 3u, 1u}}; }

unsigned WeylLabeling::of(const WeylElement& w) const {
  const auto& evens = even_weyl();
  for (std::size_t k = 0; k < evens.size(); ++k)
    if (evens[k] == w) {
      if (k >= labels.size())
        throw std::invalid_argument("WeylLabeling: labeling does not cover the even-sign set");
      return labels[k];
    }
  throw std::invalid_argument("WeylLabeling: element has det = -1");
}

void WeylLabeling::validate(const KappaCharacter& kappa) const {
  if (labels.size() != even_weyl().size())
    throw std::invalid_argument("WeylLabeling: labeling does not cover the even-sign set");
  for (unsigned l : labels)
    if (l >= (1u << kappa.rank))
      throw std::invalid_argument("WeylLabeling: label outside the kappa-domain group");
}

Complex weyl_numerator(const Weight& mu, const TorusElement& gamma,
                       const std::vector<WeylElement>& subset) {
  Complex sum = 0.0;
  for (const WeylElement& w : subset)
    sum += static_cast<double>(w.det()) * gamma.character(w.apply(mu));
  return sum;
}

Complex weyl_denominator(const TorusElement& gamma) {
  Complex prod = 1.0;
  for (const Root& r : root_system()) {
    if (!r.positive) continue;
    double half = 0.5 * (r.weight[0] * gamma.th1 + r.weight[1] * gamma.th2);
    prod *= Complex(0.0, 2.0 * std::sin(half));
  }
  return prod;
}

Complex model_character(const Weight& nu, const TorusElement& gamma) {
  Complex den = weyl_denominator(gamma);
  if (std::abs(den) < 1e-14)
    throw std::invalid_argument("model_character: singular torus element");
  Weight swapped(nu[1], nu[0]);
  return -(gamma.character(nu) - gamma.character(swapped)) / den;
}

Complex sl2_ds_character(int n, double theta, int sign) {
  if (n <= 0) throw std::invalid_argument("sl2_ds_character: parameter must be positive");
  double s = std::sin(theta);
  if (std::abs(s) < 1e-14) throw std::invalid_argument("sl2_ds_character: singular angle");
  Complex den(0.0, 2.0 * s);  // e^{i th} - e^{-i th}
  double phase = sign > 0 ? n * theta : -n * theta;
  Complex num(std::cos(phase), std::sin(phase));
  return (sign > 0 ? -1.0 : 1.0) * num / den;
}

Complex kappa_orbital(const HCParameter& p, const TorusElement& gamma,
                      const KappaCharacter& kappa, const WeylLabeling& labeling) {
  labeling.validate(kappa);
  const TorusElement ginv = gamma.inverse();
  Complex sum = 0.0;
  const auto& evens = even_weyl();
  for (std::size_t k = 0; k < evens.size(); ++k) {
    double weight = kappa(labeling.labels[k]);
    sum += weight * model_character(evens[k].apply(p.mu), ginv);
  }
  return sum;
}

int transfer_coefficient(const WeylElement& w1, const WeylElement& w2,
                         const KappaCharacter& kappa, const WeylLabeling& labeling) {
  if (w1.det() != 1 || w2.det() != 1)
    throw std::invalid_argument("transfer_coefficient: arguments must be even-sign");
  int k2 = kappa(labeling.of(w2));
  int k21 = kappa(labeling.of(w2.compose(w1)));
  return k2 * k21;  // kappa-values are +-1, so the inverse is the value itself
}

std::vector<TransferCoefficientRow> transfer_table(const HCParameter& p,
                                                   const KappaCharacter& kappa,
                                                   const WeylLabeling& labeling) {
  labeling.validate(kappa);
  std::vector<TransferCoefficientRow> rows;
  for (const WeylElement& w : even_weyl()) {
    TransferCoefficientRow row;
    row.w = w;
    row.nu = w.apply(p.mu) + p.xi;
    row.a = transfer_coefficient(w, weyl_identity(), kappa, labeling);
    rows.push_back(row);
  }
  return rows;
}

Complex stable_character_sum(const CharacterPacket& packet, const TorusElement& gamma) {
  Complex sum = 0.0;
  for (const auto& member : packet.members)
    sum += static_cast<double>(member.sign) * member.character(gamma);
  return sum;
}

}  // namespace sp4
