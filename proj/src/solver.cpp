#include "xyz/solver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <sstream>
#include <thread>

#include "xyz/errors.hpp"

namespace xyz {

ModNullvector nullvector_mod_p(ModMatrix m, const MontgomeryField& field, std::size_t reference) {
  const std::size_t n = m.dim;
  if (reference >= n) throw std::invalid_argument("nullvector_mod_p: reference out of range");
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> weight(n);
  for (std::size_t r = 0; r < n; ++r) {
    weight[r] = static_cast<std::size_t>(
        std::count_if(m.data.begin() + r * n, m.data.begin() + (r + 1) * n,
                      [](std::uint64_t x) { return x != 0; }));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t best = n;
    for (std::size_t r = rank; r < n; ++r) {
      if (m.at(r, col) != 0 && (best == n || weight[r] < weight[best])) best = r;
    }
    if (best == n) continue;
    if (best != rank) {
      std::swap_ranges(m.data.begin() + best * n, m.data.begin() + (best + 1) * n,
                       m.data.begin() + rank * n);
      std::swap(weight[best], weight[rank]);
    }
    std::uint64_t* prow = &m.data[rank * n];
    const std::uint64_t inv = field.inv(prow[col]);
    for (std::size_t j = col; j < n; ++j) prow[j] = field.mul(prow[j], inv);
    for (std::size_t r = rank + 1; r < n; ++r) {
      std::uint64_t* row = &m.data[r * n];
      const std::uint64_t f = row[col];
      if (f == 0) continue;
      std::size_t nz = 0;
      row[col] = 0;
      for (std::size_t j = col + 1; j < n; ++j) {
        if (prow[j] != 0) row[j] = field.sub(row[j], field.mul(f, prow[j]));
        nz += row[j] != 0;
      }
      weight[r] = nz;
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  ModNullvector out;
  out.nullity = n - rank;
  if (out.nullity == 0) {
    out.status = ModStatus::no_nullvector;
    return out;
  }
  if (out.nullity > 1) {
    out.status = ModStatus::degenerate;
    return out;
  }
  std::size_t free_col = n;
  for (std::size_t c = 0, k = 0; c < n; ++c) {
    if (k < pivot_cols.size() && pivot_cols[k] == c) {
      ++k;
    } else {
      free_col = c;
      break;
    }
  }
  std::vector<std::uint64_t> x(n, 0);
  x[free_col] = field.one();
  for (std::size_t k = rank; k-- > 0;) {
    const std::size_t pc = pivot_cols[k];
    const std::uint64_t* row = &m.data[k * n];
    std::uint64_t acc = 0;
    for (std::size_t j = pc + 1; j < n; ++j) {
      if (row[j] != 0 && x[j] != 0) acc = field.add(acc, field.mul(row[j], x[j]));
    }
    x[pc] = field.neg(acc);
  }
  if (x[reference] == 0) {
    out.status = ModStatus::reference_zero;
    return out;
  }
  const std::uint64_t scale = field.inv(x[reference]);
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = field.from_mont(field.mul(x[i], scale));
  out.status = ModStatus::ok;
  return out;
}

PrimePlan make_prime_plan(std::size_t budget) { return PrimePlan{word_primes(budget), 0}; }

bool is_blacklisted(const mpq_class& alpha) { return alpha == 1; }

namespace {

std::string describe(const mpq_class& a) { return a.get_str(); }

bool residual_vanishes(const SectorStructure& structure, const mpq_class& alpha,
                       const std::vector<mpq_class>& v) {
  SectorMatrix m(structure, alpha);
  for (const auto& x : m.multiply(v)) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

RationalSample rational_nullvector(const SectorStructure& structure, const mpq_class& alpha,
                                   const SolverOptions& options) {
  if (is_blacklisted(alpha)) {
    throw DegenerateSample("sample alpha = " + describe(alpha) + " is on the blacklist");
  }
  const std::size_t dim = structure.size();
  const std::size_t reference = structure.basis().single_down_index();
  PrimePlan plan = make_prime_plan(options.prime_budget);

  CrtAccumulator crt(dim);
  std::optional<std::vector<mpq_class>> previous;
  std::size_t bad_streak = 0;
  std::size_t skipped = 0;
  std::size_t max_nullity = 0;
  for (std::uint64_t p : plan.primes) {
    ++plan.used;
    if (mod_of(alpha.get_den(), p) == 0) {
      ++skipped;
      continue;
    }
    MontgomeryField field(p);
    ModNullvector nv = nullvector_mod_p(reduced_matrix_mod(structure, alpha, field), field, reference);
    if (nv.status == ModStatus::no_nullvector) {
      throw NoEigenvector("H - E is nonsingular at alpha = " + describe(alpha) + " mod " +
                          std::to_string(p) + " (N = " +
                          std::to_string(structure.basis().length()) + ")");
    }
    if (nv.status != ModStatus::ok) {
      max_nullity = std::max(max_nullity, nv.nullity);
      ++skipped;
      if (++bad_streak >= options.degenerate_after) {
        std::ostringstream os;
        os << "degenerate sample alpha = " << describe(alpha) << ": "
           << (nv.status == ModStatus::degenerate ? "nullity " + std::to_string(max_nullity)
                                                  : std::string("reference coordinate vanishes"))
           << " across " << bad_streak << " primes";
        throw DegenerateSample(os.str());
      }
      continue;
    }
    bad_streak = 0;
    crt.add(p, nv.values);

    std::vector<mpq_class> current;
    current.reserve(dim);
    bool ok = true;
    for (const auto& r : crt.residues()) {
      auto q = rational_reconstruct(r, crt.modulus());
      if (!q) {
        ok = false;
        break;
      }
      current.push_back(std::move(*q));
    }
    if (!ok) {
      previous.reset();
      continue;
    }
    if (previous && *previous == current) {
      if (!residual_vanishes(structure, alpha, current)) {
        throw Error("internal error: stable reconstruction at alpha = " + describe(alpha) +
                    " has a nonzero exact residual");
      }
      RationalSample sample;
      sample.alpha = alpha;
      sample.components = std::move(current);
      sample.reference = reference;
      sample.primes_used = crt.primes_used();
      sample.primes_skipped = skipped;
      return sample;
    }
    previous = std::move(current);
  }
  throw ReconstructionFailure("rational reconstruction did not stabilize at alpha = " +
                              describe(alpha) + " within " +
                              std::to_string(options.prime_budget) + " primes");
}

RationalSample rational_nullvector(int n, Parity parity, const mpq_class& alpha,
                                   const SolverOptions& options) {
  auto basis = std::make_shared<const SectorBasis>(enumerate_sector(n, parity));
  return rational_nullvector(SectorStructure(basis), alpha, options);
}

SampleSet collect_samples(const SectorStructure& structure, std::size_t count,
                          const SolverOptions& options, unsigned jobs) {
  SampleSet out;
  long next_point = 2;
  jobs = std::max(1u, jobs);
  while (out.samples.size() < count) {
    const std::size_t batch = count - out.samples.size();
    std::vector<mpq_class> points;
    while (points.size() < batch) {
      mpq_class a(next_point++);
      if (is_blacklisted(a)) {
        out.rejected.push_back(a);
        continue;
      }
      points.push_back(a);
    }
    std::vector<std::optional<RationalSample>> results(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    std::vector<bool> degenerate(points.size(), false);
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      for (std::size_t i = cursor++; i < points.size(); i = cursor++) {
        try {
          results[i] = rational_nullvector(structure, points[i], options);
        } catch (const DegenerateSample&) {
          degenerate[i] = true;
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    const unsigned threads = std::min<unsigned>(jobs, static_cast<unsigned>(points.size()));
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      if (degenerate[i]) {
        out.rejected.push_back(points[i]);
      } else {
        out.samples.push_back(std::move(*results[i]));
      }
    }
  }
  return out;
}

}  // namespace xyz
