#include "liftbraid/braid.hpp"

#include <cstdlib>

#include "liftbraid/errors.hpp"

namespace liftbraid {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw InvalidInput("strand count must be positive");
  for (int e : letters_)
    if (e == 0 || std::abs(e) >= strands_)
      throw InvalidInput("letter " + std::to_string(e) + " out of range for " +
                         std::to_string(strands_) + " strands");
}

BraidWord BraidWord::generator(int strands, int letter) { return BraidWord(strands, {letter}); }

BraidWord BraidWord::inverse() const {
  BraidWord out;
  out.strands_ = strands_;
  out.letters_.assign(letters_.rbegin(), letters_.rend());
  for (int& e : out.letters_) e = -e;
  return out;
}

BraidWord BraidWord::reduced() const {
  BraidWord out;
  out.strands_ = strands_;
  for (int e : letters_) {
    if (!out.letters_.empty() && out.letters_.back() == -e)
      out.letters_.pop_back();
    else
      out.letters_.push_back(e);
  }
  return out;
}

BraidWord BraidWord::power(int k) const {
  const BraidWord base = k < 0 ? inverse() : *this;
  BraidWord out;
  out.strands_ = strands_;
  for (int i = 0; i < std::abs(k); ++i)
    out.letters_.insert(out.letters_.end(), base.letters_.begin(), base.letters_.end());
  return out;
}

BraidWord BraidWord::reversed() const {
  BraidWord out(*this);
  out.letters_.assign(letters_.rbegin(), letters_.rend());
  return out;
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (rhs.strands_ != strands_) throw InvalidInput("strand count mismatch");
  BraidWord out(*this);
  out.letters_.insert(out.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return out;
}

std::string BraidWord::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < letters_.size(); ++i)
    s += (i ? "," : "") + std::to_string(letters_[i]);
  return s + "]";
}

BraidWord conjugate(const BraidWord& x, const BraidWord& u) {
  return (u * x * u.inverse()).reduced();
}

}  // namespace liftbraid
