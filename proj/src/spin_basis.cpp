#include "xyz/spin_basis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace xyz {

void require_odd_length(int n) {
  if (n < 1 || n > kMaxChainLength || n % 2 == 0) {
    throw std::invalid_argument("chain length must be odd and between 1 and 25, got " +
                                std::to_string(n));
  }
}

namespace {

std::uint32_t low_mask(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }

// Pauli matrices in the local basis (0 = down, 1 = up), element [out][in].
Eigen::Matrix2cd local_rotation(Axis axis) {
  using C = std::complex<double>;
  const C i(0, 1);
  Eigen::Matrix2cd sigma;
  switch (axis) {
    case Axis::x: sigma << 0, 1, 1, 0; break;
    case Axis::y: sigma << 0, i, -i, 0; break;
    case Axis::z: sigma << -1, 0, 0, 1; break;
  }
  return (Eigen::Matrix2cd::Identity() + i * sigma) / std::sqrt(2.0);
}

}  // namespace

SpinState::SpinState(std::uint32_t bits, int n) : bits_(bits), n_(n) {
  require_odd_length(n);
  if ((bits & ~low_mask(n)) != 0) {
    throw std::invalid_argument("SpinState: bits set above the chain length");
  }
}

SpinState SpinState::parse(std::string_view text) {
  std::uint32_t bits = 0;
  int n = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char ch = static_cast<unsigned char>(text[i]);
    if (ch == '+') {
      bits |= 1u << n;
    } else if (ch == '-') {
    } else if (ch == 0xE2 && i + 2 < text.size() &&
               static_cast<unsigned char>(text[i + 1]) == 0x88 &&
               static_cast<unsigned char>(text[i + 2]) == 0x92) {
      i += 2;  // U+2212 MINUS SIGN
    } else {
      throw std::invalid_argument("SpinState::parse: unexpected character in '" +
                                  std::string(text) + "'");
    }
    if (++n > kMaxChainLength) throw std::invalid_argument("SpinState::parse: too long");
  }
  return SpinState(bits, n);
}

int SpinState::up_count() const { return std::popcount(bits_); }

std::string SpinState::to_string() const {
  std::string out(n_, '-');
  for (int j = 0; j < n_; ++j) {
    if ((bits_ >> j) & 1u) out[j] = '+';
  }
  return out;
}

std::uint32_t SpinState::string_key() const {
  std::uint32_t key = 0;
  for (int j = 0; j < n_; ++j) key = (key << 1) | ((bits_ >> j) & 1u);
  return key;
}

SpinState shift(SpinState s) {
  const int n = s.length();
  std::uint32_t b = s.bits();
  std::uint32_t rotated = (b >> 1) | ((b & 1u) << (n - 1));
  return SpinState(rotated, n);
}

SpinState spin_flip(SpinState s) { return SpinState(~s.bits() & low_mask(s.length()), s.length()); }

SpinState canonical(SpinState s) {
  SpinState best = s;
  std::uint32_t best_key = s.string_key();
  SpinState cur = s;
  for (int r = 1; r < s.length(); ++r) {
    cur = shift(cur);
    std::uint32_t key = cur.string_key();
    if (key < best_key) {
      best_key = key;
      best = cur;
    }
  }
  return best;
}

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parse_parity(std::string_view text) {
  if (text == "even") return Parity::even;
  if (text == "odd") return Parity::odd;
  throw std::invalid_argument("parity must be 'even' or 'odd'");
}

SectorBasis enumerate_sector(int n, Parity parity) {
  require_odd_length(n);
  SectorBasis basis;
  basis.n_ = n;
  basis.parity_ = parity;
  const int want = parity == Parity::even ? 0 : 1;
  const std::uint32_t total = std::uint32_t{1} << n;
  // Walk states in string order so representatives come out sorted.
  for (std::uint32_t key = 0; key < total; ++key) {
    std::uint32_t bits = 0;
    for (int j = 0; j < n; ++j) bits |= ((key >> (n - 1 - j)) & 1u) << j;
    if (std::popcount(bits) % 2 != want) continue;
    SpinState s(bits, n);
    // A state is a representative iff no rotation has a smaller key.
    bool minimal = true;
    int period = n;
    SpinState cur = s;
    for (int r = 1; r < n; ++r) {
      cur = shift(cur);
      std::uint32_t k = cur.string_key();
      if (k < key) {
        minimal = false;
        break;
      }
      if (k == key && period == n) period = r;
    }
    if (!minimal) continue;
    basis.orbits_.push_back(Orbit{s, period});
    basis.keys_.push_back(key);
  }
  return basis;
}

std::size_t SectorBasis::index_of(SpinState s) const {
  if (s.length() != n_) throw std::invalid_argument("SectorBasis::index_of: length mismatch");
  std::uint32_t key = canonical(s).string_key();
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) {
    throw std::out_of_range("SectorBasis::index_of: state " + s.to_string() +
                            " is not in the " + to_string(parity_) + " sector");
  }
  return static_cast<std::size_t>(it - keys_.begin());
}

std::size_t SectorBasis::single_down_index() const {
  if (n_ == 1) return 0;
  std::uint32_t bits = low_mask(n_) & ~1u;
  SpinState s(bits, n_);
  if (parity_ == Parity::odd) s = spin_flip(s);
  return index_of(s);
}

Eigen::MatrixXcd rotation_matrix(Axis axis, int n) {
  require_odd_length(n);
  if (n > 13) throw std::length_error("rotation_matrix: dense form limited to n <= 13");
  const Eigen::Matrix2cd local = local_rotation(axis);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Ones(1, 1);
  // Site j is bit j - 1, so later sites are more significant: prepend as the left factor.
  for (int j = 0; j < n; ++j) {
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        next.block(a * out.rows(), b * out.cols(), out.rows(), out.cols()) = local(a, b) * out;
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::complex<double>> apply_rotation(Axis axis, int n,
                                                 std::span<const std::complex<double>> v) {
  require_odd_length(n);
  const std::size_t dim = std::size_t{1} << n;
  if (v.size() != dim) throw std::invalid_argument("apply_rotation: dimension mismatch");
  const Eigen::Matrix2cd local = local_rotation(axis);
  std::vector<std::complex<double>> out(v.begin(), v.end());
  for (int j = 0; j < n; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t s = 0; s < dim; ++s) {
      if (s & bit) continue;
      std::complex<double> lo = out[s], hi = out[s | bit];
      out[s] = local(0, 0) * lo + local(0, 1) * hi;
      out[s | bit] = local(1, 0) * lo + local(1, 1) * hi;
    }
  }
  return out;
}

}  // namespace xyz
