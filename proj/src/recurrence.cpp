#include "zeta3/recurrence.hpp"

#include <algorithm>
#include <cstdint>

namespace zeta3 {

namespace {

// ---------------------------------------------------------------------------
// Exact linear algebra over the rationals.
// ---------------------------------------------------------------------------

using Matrix = std::vector<std::vector<Rational>>;

// Solve the square system M x = rhs; throws std::runtime_error when singular.
std::vector<Rational> solve_linear(Matrix m, std::vector<Rational> rhs) {
  const std::size_t dim = m.size();
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && m[pivot][col] == 0) ++pivot;
    if (pivot == dim) throw std::runtime_error("solve_linear: singular system");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = col + 1; row < dim; ++row) {
      if (m[row][col] == 0) continue;
      const Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < dim; ++k) m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(dim);
  for (std::size_t row = dim; row-- > 0;) {
    Rational acc = rhs[row];
    for (std::size_t k = row + 1; k < dim; ++k) acc -= m[row][k] * x[k];
    x[row] = acc / m[row][row];
  }
  return x;
}

// First basis vector of the nullspace of m (rows x cols); empty when trivial.
std::vector<Rational> nullspace_vector(Matrix m) {
  if (m.empty()) return {};
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    const Rational inv = Rational(1) / m[row][col];
    for (std::size_t k = col; k < cols; ++k) m[row][k] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t k = col; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(col);
    ++row;
  }
  // Locate the first free column.
  std::size_t free_col = cols;
  {
    std::size_t idx = 0;
    for (std::size_t col = 0; col < cols; ++col) {
      if (idx < pivot_col.size() && pivot_col[idx] == col) {
        ++idx;
      } else {
        free_col = col;
        break;
      }
    }
  }
  if (free_col == cols) return {};
  std::vector<Rational> v(cols, Rational(0));
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    v[pivot_col[r]] = -m[r][free_col];
  }
  return v;
}

// ---------------------------------------------------------------------------
// Fast probe over a word-sized prime field: determines whether a relation of
// a given degree can exist before committing to exact elimination.
// ---------------------------------------------------------------------------

constexpr std::uint64_t kProbePrimes[] = {2305843009213693951ULL,  // 2^61 - 1
                                          4611686018427387847ULL};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1ULL) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1ULL;
  }
  return r;
}

// value mod p for a rational; false when the denominator collapses mod p.
bool rational_mod(const Rational& x, std::uint64_t p, std::uint64_t& out) {
  const BigInt num_mod = ((numer(x) % p) + p) % p;
  const BigInt den_mod = denom(x) % p;
  if (den_mod == 0) return false;
  const std::uint64_t inv = powmod(static_cast<std::uint64_t>(den_mod), p - 2, p);
  out = mulmod(static_cast<std::uint64_t>(num_mod), inv, p);
  return true;
}

// Rank of an integer matrix mod p.
std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const std::uint64_t inv = powmod(m[rank][col], p - 2, p);
    for (std::size_t k = col; k < cols; ++k) m[rank][k] = mulmod(m[rank][k], inv, p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const std::uint64_t f = m[r][col];
      for (std::size_t k = col; k < cols; ++k) {
        m[r][k] = (m[r][k] + p - mulmod(f, m[rank][k], p)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

struct WindowSource {
  const Sequence* primary;
  const Sequence* secondary;

  // All window start indices usable for building rows, primary interleaved
  // with secondary, ordered by n.
  std::vector<std::pair<const Sequence*, long>> windows() const {
    std::vector<std::pair<const Sequence*, long>> out;
    const long lo = primary->first_n;
    long hi = primary->last_n() - 2;
    if (secondary) hi = std::max(hi, secondary->last_n() - 2);
    for (long n = lo; n <= hi; ++n) {
      if (n >= primary->first_n && n + 2 <= primary->last_n()) out.emplace_back(primary, n);
      if (secondary && n >= secondary->first_n && n + 2 <= secondary->last_n()) {
        out.emplace_back(secondary, n);
      }
    }
    return out;
  }
};

std::vector<Rational> window_row(const Sequence& seq, long n, int degree) {
  std::vector<Rational> row;
  row.reserve(3 * static_cast<std::size_t>(degree + 1));
  for (int block = 0; block < 3; ++block) {
    const Rational& value = seq.at(n + 2 - block);
    Rational power = 1;
    for (int e = 0; e <= degree; ++e) {
      row.push_back(power * value);
      power *= Rational(n);
    }
  }
  return row;
}

// Does a degree-d relation exist on these windows?  Checked mod a prime:
// a nullspace over Q implies one mod p, so rank < cols is necessary; a rank
// deficit mod p is only probabilistic evidence, which the exact elimination
// and the held-out verification then confirm.
bool probe_degree(const std::vector<std::pair<const Sequence*, long>>& windows,
                  std::size_t rows_needed, int degree) {
  const std::size_t cols = 3 * static_cast<std::size_t>(degree + 1);
  for (const std::uint64_t p : kProbePrimes) {
    std::vector<std::vector<std::uint64_t>> m;
    bool bad_prime = false;
    for (std::size_t w = 0; w < rows_needed && !bad_prime; ++w) {
      const auto& [seq, n] = windows[w];
      std::vector<std::uint64_t> row;
      row.reserve(cols);
      const std::uint64_t n_mod = static_cast<std::uint64_t>(n % static_cast<long>(p));
      for (int block = 0; block < 3; ++block) {
        std::uint64_t value = 0;
        if (!rational_mod(seq->at(n + 2 - block), p, value)) {
          bad_prime = true;
          break;
        }
        std::uint64_t power = 1;
        for (int e = 0; e <= degree; ++e) {
          row.push_back(mulmod(power, value, p));
          power = mulmod(power, n_mod, p);
        }
      }
      if (!bad_prime) m.push_back(std::move(row));
    }
    if (bad_prime) continue;  // try the next prime
    return rank_mod(std::move(m), p) < cols;
  }
  return true;  // both primes unusable: fall through to exact elimination
}

Recurrence2 normalize_relation(std::vector<Rational> v, int degree, long valid_from) {
  const std::size_t width = static_cast<std::size_t>(degree + 1);
  auto slice = [&](std::size_t offset) {
    return Poly(std::vector<Rational>(v.begin() + static_cast<long>(offset),
                                      v.begin() + static_cast<long>(offset + width)));
  };
  Poly alpha = slice(0);
  Poly beta = slice(width);
  Poly gamma = slice(2 * width);
  // Joint primitive scaling: integer coefficients, overall content 1,
  // leading coefficient of alpha positive.
  BigInt den_lcm = 1;
  for (const Poly* p : {&alpha, &beta, &gamma}) {
    for (const auto& c : p->coeffs()) den_lcm = boost::multiprecision::lcm(den_lcm, denom(c));
  }
  BigInt num_gcd = 0;
  for (const Poly* p : {&alpha, &beta, &gamma}) {
    for (const auto& c : p->coeffs()) {
      if (c != 0) {
        num_gcd = boost::multiprecision::gcd(num_gcd, BigInt(numer(c) * (den_lcm / denom(c))));
      }
    }
  }
  Rational scale(den_lcm, num_gcd);
  if (!alpha.is_zero() && alpha.leading() < 0) scale = -scale;
  return Recurrence2{alpha * scale, beta * scale, gamma * scale, valid_from};
}

}  // namespace

Rational wronskian(const Rational& q_n, const Rational& p_n,
                   const Rational& q_n1, const Rational& p_n1) {
  return q_n * p_n1 - q_n1 * p_n;
}

Poly wronskian_numerator_12(long theta) {
  const Rational t(theta);
  const Rational t2 = t * t;
  // (24n^3+30n^2+16n+3) t^2 + (9n^2+5n+1) t - (12n^3+21n^2+11n+2)
  return Poly(std::vector<Rational>{
      3 * t2 + t - 2,
      16 * t2 + 5 * t - 11,
      30 * t2 + 9 * t - 21,
      24 * t2 - 12,
  });
}

Rational wronskian_closed_form_12(long theta, long n) {
  if (n < 1) throw std::domain_error("wronskian_closed_form_12: n must be >= 1");
  const Rational num = wronskian_numerator_12(theta).eval(Rational(n));
  const Rational den = rat_pow(Rational(n), 3) * rat_pow(Rational(n + 1), 3);
  return 2 * num / den;
}

Recurrence2 recurrence_closed_form_12(long theta) {
  const Rational t(theta);
  const Rational t2 = t * t;
  const Poly n_plus_2_cubed = Poly::linear(1, 2).pow(3);
  const Poly n_cubed = Poly::linear(1, 0).pow(3);
  const Poly big_n = wronskian_numerator_12(theta);
  // N(n+1) via Horner in (n+1).
  Poly big_n_shift;
  for (int k = big_n.degree(); k >= 0; --k) {
    big_n_shift = big_n_shift * Poly::linear(1, 1) + Poly(big_n[static_cast<std::size_t>(k)]);
  }
  const Poly beta = Poly(std::vector<Rational>{
                        172 * t2 + 52 * t - 120,
                        1268 * t2 + 382 * t - 886,
                        3810 * t2 + 1143 * t - 2667,
                        6130 * t2 + 1417 * t - 4011,
                        5336 * t2 + 769 * t - 3181,
                        2346 * t2 + 153 * t - 1275,
                        408 * t2 - 204,
                    }) *
                    Rational(-2);
  return Recurrence2{n_plus_2_cubed * big_n, beta, n_cubed * big_n_shift, 1};
}

Recurrence2 apery_recurrence() {
  const Poly alpha = Poly::linear(1, 2).pow(3);
  const Poly beta(std::vector<Rational>{-117, -231, -153, -34});
  const Poly gamma = Poly::linear(1, 1).pow(3);
  return Recurrence2{alpha, beta, gamma, 0};
}

std::pair<Rational, Rational> characteristic_coefficients(const Recurrence2& rec) {
  if (rec.alpha.is_zero()) throw std::domain_error("characteristic_coefficients: zero alpha");
  if (rec.alpha.degree() != rec.beta.degree() || rec.alpha.degree() != rec.gamma.degree()) {
    throw std::domain_error("characteristic_coefficients: coefficient degrees differ");
  }
  return {rec.beta.leading() / rec.alpha.leading(), rec.gamma.leading() / rec.alpha.leading()};
}

VerifyResult verify_recurrence(const Recurrence2& rec, const Sequence& y, long n_from, long n_to) {
  VerifyResult result;
  result.n_from = n_from;
  result.n_to = n_to;
  result.ok = true;
  if (n_from < rec.valid_from) {
    throw std::invalid_argument("verify_recurrence: range starts before the relation is valid");
  }
  for (long n = n_from; n <= n_to; ++n) {
    const Rational residual = rec.alpha.eval(Rational(n)) * y.at(n + 2) +
                              rec.beta.eval(Rational(n)) * y.at(n + 1) +
                              rec.gamma.eval(Rational(n)) * y.at(n);
    if (residual != 0) {
      result.ok = false;
      result.first_failure = n;
      return result;
    }
  }
  return result;
}

Poly fit_beta(const Sequence& q, const Poly& alpha, const Poly& gamma, int degree, long first_n) {
  if (degree < 0) throw std::invalid_argument("fit_beta: degree must be >= 0");
  const long last_needed = first_n + degree + 4;  // two held-out windows
  if (q.first_n > first_n || q.last_n() < last_needed) {
    throw std::invalid_argument("fit_beta: sequence data must cover n = " +
                                std::to_string(first_n) + ".." + std::to_string(last_needed));
  }
  const std::size_t unknowns = static_cast<std::size_t>(degree) + 1;
  // Middle coefficient value progression: m(n) q_{n+1} = alpha(n) q_{n+2} + gamma(n) q_n.
  const auto rhs_at = [&](long n) {
    return alpha.eval(Rational(n)) * q.at(n + 2) + gamma.eval(Rational(n)) * q.at(n);
  };
  Matrix m(unknowns, std::vector<Rational>(unknowns));
  std::vector<Rational> rhs(unknowns);
  for (std::size_t row = 0; row < unknowns; ++row) {
    const long n = first_n + static_cast<long>(row);
    Rational power = 1;
    for (std::size_t e = 0; e < unknowns; ++e) {
      m[row][e] = power * q.at(n + 1);
      power *= Rational(n);
    }
    rhs[row] = rhs_at(n);
  }
  const Poly middle(solve_linear(std::move(m), std::move(rhs)));
  for (long n = first_n + degree + 1; n <= first_n + degree + 2; ++n) {
    if (middle.eval(Rational(n)) * q.at(n + 1) != rhs_at(n)) {
      throw std::runtime_error("fit_beta: interpolant fails held-out windows");
    }
  }
  return -middle;
}

std::optional<Recurrence2> discover_recurrence(const Sequence& primary, const Sequence* secondary,
                                               int max_degree, std::optional<int> degree_hint) {
  WindowSource source{&primary, secondary};
  const auto windows = source.windows();

  std::vector<int> order;
  if (degree_hint && *degree_hint >= 1 && *degree_hint <= max_degree) order.push_back(*degree_hint);
  for (int d = 1; d <= max_degree; ++d) {
    if (!degree_hint || d != *degree_hint) order.push_back(d);
  }

  for (const int degree : order) {
    const std::size_t cols = 3 * static_cast<std::size_t>(degree + 1);
    const std::size_t rows_needed = cols + 6;
    if (windows.size() < rows_needed) continue;
    if (!probe_degree(windows, rows_needed, degree)) continue;

    Matrix m;
    m.reserve(rows_needed);
    for (std::size_t w = 0; w < rows_needed; ++w) {
      m.push_back(window_row(*windows[w].first, windows[w].second, degree));
    }
    const auto v = nullspace_vector(std::move(m));
    if (v.empty()) continue;

    Recurrence2 rec = normalize_relation(v, degree, primary.first_n);
    if (rec.alpha.is_zero() || rec.gamma.is_zero()) continue;

    // The candidate must annihilate every window we have, including the ones
    // not used to build the nullspace.
    bool exact = true;
    for (const auto& [seq, n] : windows) {
      const Rational residual = rec.alpha.eval(Rational(n)) * seq->at(n + 2) +
                                rec.beta.eval(Rational(n)) * seq->at(n + 1) +
                                rec.gamma.eval(Rational(n)) * seq->at(n);
      if (residual != 0) {
        exact = false;
        break;
      }
    }
    if (exact) return rec;
  }
  return std::nullopt;
}

}  // namespace zeta3
