#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace xyz {

inline constexpr int kMaxChainLength = 25;

// Throws std::invalid_argument unless n is odd and 1 <= n <= kMaxChainLength.
void require_odd_length(int n);

// Configuration mu_1 ... mu_N of the chain. Bit j is set iff mu_{j+1} = +1, so the
// all-down state is the zero word.
class SpinState {
 public:
  SpinState(std::uint32_t bits, int n);
  // Parses "-++" (mu_1 leftmost); accepts ASCII '-' or U+2212 for down spins.
  static SpinState parse(std::string_view text);

  std::uint32_t bits() const { return bits_; }
  int length() const { return n_; }
  int up_count() const;
  // mu_{site} for site in 1..N.
  int spin(int site) const { return (bits_ >> (site - 1)) & 1u ? +1 : -1; }
  int magnetization() const { return 2 * up_count() - n_; }

  // Text form, mu_1 leftmost, ASCII '-' and '+'.
  std::string to_string() const;
  // Integer whose binary expansion reads mu_1 ... mu_N from the most significant
  // digit ('+' = 1); orders states lexicographically by their string.
  std::uint32_t string_key() const;

  friend bool operator==(const SpinState&, const SpinState&) = default;

 private:
  std::uint32_t bits_;
  int n_;
};

// S|mu_1 mu_2 ... mu_N> = |mu_2 ... mu_N mu_1>.
SpinState shift(SpinState s);
SpinState spin_flip(SpinState s);
// The lexicographically smallest string among the cyclic rotations of s.
SpinState canonical(SpinState s);

enum class Parity { even, odd };

std::string to_string(Parity p);
Parity parse_parity(std::string_view text);

struct Orbit {
  SpinState representative;
  int size;
};

// One parity sector of the chain grouped into cyclic orbits. Orbits are ordered by
// the string order of their canonical representative, so orbit 0 is all-down in
// the even sector.
class SectorBasis {
 public:
  int length() const { return n_; }
  Parity parity() const { return parity_; }
  const std::vector<Orbit>& orbits() const { return orbits_; }
  std::size_t size() const { return orbits_.size(); }

  // Orbit position of any member state; throws if the state is outside this sector.
  std::size_t index_of(SpinState s) const;
  // Position of the orbit of -++...+ (one down spin), or of the single orbit when N = 1.
  std::size_t single_down_index() const;

  friend SectorBasis enumerate_sector(int n, Parity parity);

 private:
  int n_ = 0;
  Parity parity_ = Parity::even;
  std::vector<Orbit> orbits_;
  std::vector<std::uint32_t> keys_;  // string_key of each representative, ascending
};

SectorBasis enumerate_sector(int n, Parity parity);

enum class Axis { x, y, z };

// Dense R^{axis}(pi/2) = prod_j (1 + i sigma_j^{axis}) / sqrt(2) on the full 2^N space,
// basis index = SpinState::bits(). Limited to n <= 13.
Eigen::MatrixXcd rotation_matrix(Axis axis, int n);

// Applies the same operator to a state vector without forming the matrix.
std::vector<std::complex<double>> apply_rotation(Axis axis, int n,
                                                 std::span<const std::complex<double>> v);

}  // namespace xyz
