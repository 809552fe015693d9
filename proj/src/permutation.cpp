#include "liftbraid/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "liftbraid/errors.hpp"

namespace liftbraid {

Permutation::Permutation(int degree) {
  if (degree < 1) throw InvalidInput("permutation degree must be positive");
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  if (images.empty()) throw InvalidInput("permutation degree must be positive");
  std::vector<bool> hit(images.size() + 1, false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || hit[static_cast<std::size_t>(v)])
      throw InvalidInput("images do not form a bijection");
    hit[static_cast<std::size_t>(v)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw InvalidInput("degree mismatch in composition");
  Permutation out(*this);
  for (int& v : out.images_) v = rhs(v);
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(*this);
  for (int k = 1; k <= degree(); ++k) out.images_[static_cast<std::size_t>((*this)(k) - 1)] = k;
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] != static_cast<int>(k + 1)) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int k = 1; k <= degree(); ++k) {
    if (seen[static_cast<std::size_t>(k)]) continue;
    auto& cyc = out.emplace_back();
    for (int x = k; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cyc.push_back(x);
    }
  }
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  if (!any) os << "id";
  return os.str();
}

Transposition::Transposition(int a, int b) : a_(std::min(a, b)), b_(std::max(a, b)) {
  if (a_ < 1) throw InvalidInput("sheet indices are 1-based");
  if (a_ == b_) throw InvalidInput("transposition endpoints must differ");
}

Permutation Transposition::as_permutation(int degree) const {
  if (b_ > degree) throw InvalidInput("transposition exceeds degree");
  std::vector<int> im(static_cast<std::size_t>(degree));
  for (int k = 1; k <= degree; ++k) im[static_cast<std::size_t>(k - 1)] = (*this)(k);
  return Permutation::from_images(std::move(im));
}

std::string Transposition::to_string() const {
  return "(" + std::to_string(a_) + " " + std::to_string(b_) + ")";
}

CycleType CycleType::make(int degree, std::vector<int> parts) {
  if (degree < 1) throw InvalidInput("cycle type degree must be positive");
  int total = 0;
  for (int p : parts) {
    if (p < 2) throw InvalidInput("cycle type parts must be >= 2");
    total += p;
  }
  if (total > degree) throw InvalidInput("cycle type parts exceed degree");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return CycleType{degree, std::move(parts)};
}

int CycleType::moved_points() const noexcept {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string CycleType::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + "]";
}

CycleType cycle_type(const Permutation& p) {
  std::vector<int> parts;
  for (const auto& c : p.cycles())
    if (c.size() >= 2) parts.push_back(static_cast<int>(c.size()));
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return CycleType{p.degree(), std::move(parts)};
}

}  // namespace liftbraid
