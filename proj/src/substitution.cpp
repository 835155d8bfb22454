#include "lsb/substitution.hpp"


#include "lsb/errors.hpp"

namespace lsb {

Substitution::Substitution(std::vector<Polynomial> images) : images_(std::move(images)) {
  if (images_.empty()) throw UsageError("substitution without images");
  const Ring& ring = images_.front().ring();
  if (images_.size() != ring->num_vars()) {
    throw UsageError("substitution needs one image per variable");
  }
  for (const Polynomial& p : images_) {
    if (!p.ring()->same_as(*ring)) throw UsageError("substitution images use different rings");
    if (p.constant_term() != 0) {
      throw UsageError("invalid substitution: image " + p.to_string() +
                       " has a nonzero constant term");
    }
  }
}

Substitution Substitution::identity(const Ring& ring) {
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < ring->num_vars(); ++v) images.push_back(Polynomial::variable(ring, v));
  return Substitution(std::move(images));
}

std::vector<std::vector<Rational>> Substitution::linear_part() const {
  const std::size_t n = images_.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (const Term& t : images_[i].terms()) {
      if (t.mono.degree() != 1) continue;
      m[i][static_cast<std::size_t>(t.mono.max_variable())] = t.coeff;
    }
  }
  return m;
}

bool Substitution::is_automorphism() const { return determinant(linear_part()) != 0; }

Polynomial substitute(const Polynomial& f, const Substitution& sigma) {
  const auto& images = sigma.images();
  if (images.size() != f.num_vars()) throw UsageError("substitution arity mismatch");
  const Ring& ring = images.front().ring();
  // powers[v][k] = images[v]^k, grown on demand
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, int k) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(ring, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[v]);
    return cache[static_cast<std::size_t>(k)];
  };
  Polynomial out(ring);
  for (const Term& t : f.terms()) {
    Polynomial img = Polynomial::constant(ring, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v) {
      if (t.mono[v] > 0) img = img * power(v, t.mono[v]);
    }
    out += img;
  }
  return out;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

}  // namespace lsb
