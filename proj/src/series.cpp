#include "qseries/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qseries/kernels.hpp"

namespace qseries {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::size_t as_size(std::int64_t n) { return static_cast<std::size_t>(std::max<std::int64_t>(n, 0)); }

}  // namespace

TruncatedSeries::TruncatedSeries(std::int64_t valuation, std::vector<Integer> coeffs, std::int64_t order)
    : valuation_(valuation), order_(order), coeffs_(std::move(coeffs)) {
  normalize();
}

void TruncatedSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
  if (lead == 0) return;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  valuation_ += static_cast<std::int64_t>(lead);
}

TruncatedSeries TruncatedSeries::make(std::int64_t valuation, std::vector<Integer> coeffs, std::int64_t order) {
  if (order < valuation) {
    throw SeriesError("order " + std::to_string(order) + " is below valuation " + std::to_string(valuation));
  }
  if (static_cast<std::int64_t>(coeffs.size()) != order - valuation) {
    throw SeriesError("expected " + std::to_string(order - valuation) + " coefficients, got " +
                      std::to_string(coeffs.size()));
  }
  return TruncatedSeries(valuation, std::move(coeffs), order);
}

TruncatedSeries TruncatedSeries::from_ints(std::int64_t valuation, const std::vector<long>& coeffs,
                                           std::int64_t order) {
  std::vector<Integer> big(coeffs.begin(), coeffs.end());
  return make(valuation, std::move(big), order);
}

TruncatedSeries TruncatedSeries::zero(std::int64_t order) { return TruncatedSeries(order, {}, order); }

TruncatedSeries TruncatedSeries::constant(const Integer& c, std::int64_t order) { return monomial(c, 0, order); }

TruncatedSeries TruncatedSeries::monomial(const Integer& c, std::int64_t exponent, std::int64_t order) {
  if (exponent >= order) return zero(order);
  std::vector<Integer> coeffs(as_size(order - exponent));
  coeffs[0] = c;
  return TruncatedSeries(exponent, std::move(coeffs), order);
}

Integer TruncatedSeries::coeff(std::int64_t exponent) const {
  if (exponent >= order_) {
    throw std::out_of_range("coefficient of q^" + std::to_string(exponent) + " is beyond order " +
                            std::to_string(order_));
  }
  if (exponent < valuation_) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - valuation_)];
}

TruncatedSeries TruncatedSeries::truncate(std::int64_t order) const {
  if (order > order_) {
    throw SeriesError("cannot raise order " + std::to_string(order_) + " to " + std::to_string(order));
  }
  if (order <= valuation_) return zero(order);
  std::vector<Integer> c(coeffs_.begin(), coeffs_.begin() + (order - valuation_));
  return TruncatedSeries(valuation_, std::move(c), order);
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const std::int64_t e = valuation_ + static_cast<std::int64_t>(i);
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  os << (first ? "" : " + ") << "O(q^" << order_ << ")";
  return os.str();
}

std::optional<std::int64_t> first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::int64_t upto = std::min(a.order(), b.order());
  for (std::int64_t e = std::min(a.valuation(), b.valuation()); e < upto; ++e) {
    if (a.coeff(e) != b.coeff(e)) return e;
  }
  return std::nullopt;
}

namespace {

TruncatedSeries combine(const TruncatedSeries& a, const TruncatedSeries& b, int sign) {
  const std::int64_t order = std::min(a.order(), b.order());
  const std::int64_t val = std::min({a.valuation(), b.valuation(), order});
  std::vector<Integer> c(as_size(order - val));
  const auto ca = a.coeffs();
  for (std::int64_t e = a.valuation(); e < order; ++e) {
    c[static_cast<std::size_t>(e - val)] = ca[static_cast<std::size_t>(e - a.valuation())];
  }
  const auto cb = b.coeffs();
  for (std::int64_t e = b.valuation(); e < order; ++e) {
    auto& dst = c[static_cast<std::size_t>(e - val)];
    const auto& src = cb[static_cast<std::size_t>(e - b.valuation())];
    if (sign > 0) {
      dst += src;
    } else {
      dst -= src;
    }
  }
  return TruncatedSeries::make(val, std::move(c), order);
}

}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return combine(a, b, +1); }

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) { return combine(a, b, -1); }

TruncatedSeries negate(const TruncatedSeries& a) { return scale(a, -1); }

TruncatedSeries scale(const TruncatedSeries& a, const Integer& c) {
  std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x *= c;
  return TruncatedSeries::make(a.valuation(), std::move(out), a.order());
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::int64_t val = a.valuation() + b.valuation();
  const std::int64_t order = std::min(a.order() + b.valuation(), b.order() + a.valuation());
  auto c = kernels::convolve(a.coeffs(), b.coeffs(), as_size(order - val));
  return TruncatedSeries::make(val, std::move(c), order);
}

TruncatedSeries invert(const TruncatedSeries& a) {
  if (a.is_zero()) throw NonInvertibleError("cannot invert a series with no known nonzero coefficient");
  const Integer& lead = a.coeffs()[0];
  if (lead != 1 && lead != -1) {
    throw NonInvertibleError("leading coefficient " + lead.get_str() + " is not a unit");
  }
  const std::int64_t rel = a.order() - a.valuation();
  auto c = kernels::inverse(a.coeffs(), as_size(rel));
  return TruncatedSeries::make(-a.valuation(), std::move(c), rel - a.valuation());
}

TruncatedSeries pow(const TruncatedSeries& a, std::int64_t e) {
  if (e < 0) return pow(invert(a), -e);
  if (e == 0) return TruncatedSeries::constant(1, a.order() - a.valuation());
  TruncatedSeries base = a;
  std::optional<TruncatedSeries> acc;
  for (;;) {
    if (e & 1) acc = acc ? mul(*acc, base) : base;
    e >>= 1;
    if (e == 0) break;
    base = mul(base, base);
  }
  return *acc;
}

TruncatedSeries shift(const TruncatedSeries& a, std::int64_t k) {
  std::vector<Integer> c(a.coeffs().begin(), a.coeffs().end());
  return TruncatedSeries::make(a.valuation() + k, std::move(c), a.order() + k);
}

TruncatedSeries extract_ap(const TruncatedSeries& a, std::int64_t m, std::int64_t r) {
  if (m < 1 || r < 0 || r >= m) {
    throw DomainError("extract_ap needs m >= 1 and 0 <= r < m (m=" + std::to_string(m) + ", r=" + std::to_string(r) +
                      ")");
  }
  const std::int64_t hi = ceil_div(a.order() - r, m);
  const std::int64_t lo = std::min(ceil_div(a.valuation() - r, m), hi);
  std::vector<Integer> c(as_size(hi - lo));
  for (std::int64_t n = lo; n < hi; ++n) c[static_cast<std::size_t>(n - lo)] = a.coeff(m * n + r);
  return TruncatedSeries::make(lo, std::move(c), hi);
}

TruncatedSeries substitute(const TruncatedSeries& a, std::int64_t k) {
  if (k == 0) throw DomainError("substitute needs a nonzero scale");
  const std::int64_t step = k < 0 ? -k : k;
  const std::int64_t val = a.valuation() * step;
  const std::int64_t order = a.order() * step;
  std::vector<Integer> c(as_size(order - val));
  const auto src = a.coeffs();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const std::int64_t e = a.valuation() + static_cast<std::int64_t>(i);
    auto& dst = c[i * static_cast<std::size_t>(step)];
    dst = src[i];
    if (k < 0 && (e % 2 != 0)) dst = -dst;
  }
  return TruncatedSeries::make(val, std::move(c), order);
}

TruncatedSeries reduce_mod(const TruncatedSeries& a, const Integer& modulus) {
  if (modulus < 2) throw DomainError("reduce_mod needs a modulus >= 2, got " + modulus.get_str());
  const bool big = a.coeffs().size() >= 4096 && kernels::parallel_enabled();
  auto c = big ? kernels::reduce_mod_omp(a.coeffs(), modulus) : kernels::reduce_mod_serial(a.coeffs(), modulus);
  return TruncatedSeries::make(a.valuation(), std::move(c), a.order());
}

namespace {

void check_binomial(int c, std::int64_t k) {
  if ((c != 1 && c != -1) || k < 1) throw DomainError("binomial factor must be (1 +- q^k), k >= 1");
}

// The shift-by-k recurrence depends only on relative exponents, so it runs
// directly on the stored buffer.
template <typename Kernel>
TruncatedSeries binomial_update(const TruncatedSeries& a, int c, std::int64_t k, Kernel kernel) {
  check_binomial(c, k);
  std::vector<Integer> x(a.coeffs().begin(), a.coeffs().end());
  kernel(x, c, static_cast<std::size_t>(k));
  return TruncatedSeries::make(a.valuation(), std::move(x), a.order());
}

}  // namespace

TruncatedSeries mul_binomial(const TruncatedSeries& a, int c, std::int64_t k) {
  return binomial_update(a, c, k, kernels::mul_binomial_inplace);
}

TruncatedSeries div_binomial(const TruncatedSeries& a, int c, std::int64_t k) {
  return binomial_update(a, c, k, kernels::div_binomial_inplace);
}

}  // namespace qseries
