#include "sccore/series.hpp"

#include <cstdlib>
#include <string>

namespace sccore {

namespace {

void require_order(int order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "series order must be non-negative");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  require_order(order);
  coeffs_.assign(static_cast<size_t>(order) + 1, BigInt(0));
}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "a series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

const BigInt& TruncatedSeries::operator[](int n) const {
  static const BigInt zero = 0;
  if (n < 0) return zero;
  if (n > order()) {
    throw Error(ErrorCode::OutOfRange,
                "coefficient " + std::to_string(n) + " beyond order " + std::to_string(order()));
  }
  return coeffs_[static_cast<size_t>(n)];
}

TruncatedSeries& TruncatedSeries::mul_binomial(int k, int sign) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "factor exponent must be positive");
  const int n_max = order();
  for (int n = n_max; n >= k; --n) {
    if (sign > 0) {
      coeffs_[static_cast<size_t>(n)] += coeffs_[static_cast<size_t>(n - k)];
    } else {
      coeffs_[static_cast<size_t>(n)] -= coeffs_[static_cast<size_t>(n - k)];
    }
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::div_binomial(int k, int sign) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "factor exponent must be positive");
  const int n_max = order();
  for (int n = k; n <= n_max; ++n) {
    if (sign > 0) {
      coeffs_[static_cast<size_t>(n)] -= coeffs_[static_cast<size_t>(n - k)];
    } else {
      coeffs_[static_cast<size_t>(n)] += coeffs_[static_cast<size_t>(n - k)];
    }
  }
  return *this;
}

std::vector<std::pair<int, int>> pentagonal_terms(int m, int order) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "pentagonal step must be positive");
  std::vector<std::pair<int, int>> terms{{0, 1}};
  for (long long k = 1;; ++k) {
    const int sign = (k % 2 == 0) ? 1 : -1;
    const long long g1 = m * (k * (3 * k - 1) / 2);
    const long long g2 = m * (k * (3 * k + 1) / 2);
    if (g1 > order) break;
    terms.emplace_back(static_cast<int>(g1), sign);
    if (g2 <= order) terms.emplace_back(static_cast<int>(g2), sign);
  }
  return terms;
}

TruncatedSeries& TruncatedSeries::mul_euler(int m) {
  const auto terms = pentagonal_terms(m, order());
  for (int n = order(); n >= 1; --n) {
    BigInt& c = coeffs_[static_cast<size_t>(n)];
    for (size_t j = 1; j < terms.size() && terms[j].first <= n; ++j) {
      const BigInt& src = coeffs_[static_cast<size_t>(n - terms[j].first)];
      if (terms[j].second > 0) {
        c += src;
      } else {
        c -= src;
      }
    }
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::div_euler(int m) {
  const auto terms = pentagonal_terms(m, order());
  for (int n = 1; n <= order(); ++n) {
    BigInt& c = coeffs_[static_cast<size_t>(n)];
    for (size_t j = 1; j < terms.size() && terms[j].first <= n; ++j) {
      const BigInt& src = coeffs_[static_cast<size_t>(n - terms[j].first)];
      if (terms[j].second > 0) {
        c -= src;
      } else {
        c += src;
      }
    }
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::mul_euler_power(int m, int e) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "Euler product step must be positive");
  const int n_max = order();
  if (e == 0 || m > n_max) return *this;

  const long long reps = std::llabs(static_cast<long long>(e));
  const int k_max = n_max / m;
  const long long terms = static_cast<long long>(pentagonal_terms(1, k_max).size());
  // Either apply the sparse pentagonal factor |e| times, or raise it to the
  // e-th power in x = q^m (only k_max + 1 coefficients) and convolve once.
  const long long repeated = reps * n_max * terms;
  const long long dilated = reps * k_max * terms + static_cast<long long>(n_max) * (k_max + 1);
  if (m == 1 || repeated <= dilated) {
    for (long long r = 0; r < reps; ++r) {
      if (e > 0) {
        mul_euler(m);
      } else {
        div_euler(m);
      }
    }
    return *this;
  }

  TruncatedSeries power = TruncatedSeries::one(k_max);
  power.mul_euler_power(1, e);
  for (int n = n_max; n >= m; --n) {
    BigInt acc = 0;
    for (int j = 1; j * m <= n; ++j) {
      const BigInt& f = power.coeffs_[static_cast<size_t>(j)];
      if (!f.is_zero()) acc += f * coeffs_[static_cast<size_t>(n - j * m)];
    }
    coeffs_[static_cast<size_t>(n)] += acc;
  }
  return *this;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  require_order(order);
  if (order > this->order()) {
    throw Error(ErrorCode::OutOfRange, "cannot extend a series past its order");
  }
  return TruncatedSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw Error(ErrorCode::InvalidArgument, "series orders differ");
  const int n_max = a.order();
  std::vector<BigInt> out(static_cast<size_t>(n_max) + 1);
  for (int i = 0; i <= n_max; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n_max; ++j) {
      if (!b[j].is_zero()) out[static_cast<size_t>(i + j)] += a[i] * b[j];
    }
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries binomial_factor(int sign, int step, int offset, int exponent, int order) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  if (step < 1 || step + offset < 1) {
    throw Error(ErrorCode::InvalidArgument, "factor exponents step*n + offset must be positive for n >= 1");
  }
  TruncatedSeries s = TruncatedSeries::one(order);
  const int reps = std::abs(exponent);
  for (long long n = 1;; ++n) {
    const long long k = step * n + offset;
    if (k > order) break;
    for (int r = 0; r < reps; ++r) {
      if (exponent > 0) {
        s.mul_binomial(static_cast<int>(k), sign);
      } else {
        s.div_binomial(static_cast<int>(k), sign);
      }
    }
  }
  return s;
}

TruncatedSeries euler_power(int m, int e, int order) {
  return TruncatedSeries::one(order).mul_euler_power(m, e);
}

TruncatedSeries sc_coeffs(int order) {
  // prod (1 + q^{2n-1}) = E(q^2)^2 / (E(q) E(q^4)) with E(q) = prod (1 - q^n).
  TruncatedSeries s = TruncatedSeries::one(order);
  s.div_euler(1);
  s.mul_euler_power(2, 2);
  s.div_euler(4);
  return s;
}

TruncatedSeries p_coeffs(int order) { return TruncatedSeries::one(order).div_euler(1); }

TruncatedSeries phat_coeffs(int t, int order) {
  if (t < 1) throw Error(ErrorCode::UnsupportedT, "phat requires t >= 1");
  return TruncatedSeries::one(order).mul_euler_power(1, -t);
}

TruncatedSeries c_t_coeffs(int t, int order) {
  if (t < 1) throw Error(ErrorCode::UnsupportedT, "c_t requires t >= 1");
  TruncatedSeries s = p_coeffs(order);
  s.mul_euler_power(t, t);
  return s;
}

TruncatedSeries sc_t_coeffs(int t, int order) {
  if (t < 2) throw Error(ErrorCode::UnsupportedT, "sc_t requires t >= 2");
  require_order(order);
  TruncatedSeries s = default_store().sc(order)->truncated(order);
  if (t % 2 == 0) {
    s.mul_euler_power(2 * t, t / 2);
  } else {
    // 1 / prod (1 + q^{t(2n-1)}) = E(q^t) E(q^{4t}) / E(q^{2t})^2.
    s.mul_euler_power(2 * t, (t - 1) / 2 - 2);
    s.mul_euler_power(t, 1);
    s.mul_euler_power(4 * t, 1);
  }
  return s;
}

TruncatedSeries sc_t_coeffs_factorwise(int t, int order) {
  if (t < 2) throw Error(ErrorCode::UnsupportedT, "sc_t requires t >= 2");
  TruncatedSeries s = binomial_factor(+1, 2, -1, 1, order);
  const int e = (t % 2 == 0) ? t / 2 : (t - 1) / 2;
  for (long long n = 1; 2LL * t * n <= order; ++n) {
    for (int r = 0; r < e; ++r) s.mul_binomial(static_cast<int>(2LL * t * n), -1);
  }
  if (t % 2 == 1) {
    for (long long n = 1; t * (2 * n - 1) <= order; ++n) s.div_binomial(static_cast<int>(t * (2 * n - 1)), +1);
  }
  return s;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Sc: return "sc";
    case Family::ScT: return "sc_t";
    case Family::CT: return "c_t";
    case Family::Phat: return "phat";
    case Family::P: return "p";
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view s) {
  if (s == "sc") return Family::Sc;
  if (s == "sc_t") return Family::ScT;
  if (s == "c_t" || s == "c") return Family::CT;
  if (s == "phat") return Family::Phat;
  if (s == "p") return Family::P;
  return std::nullopt;
}

bool family_has_t(Family f) { return f == Family::ScT || f == Family::CT || f == Family::Phat; }

TruncatedSeries compute_family(Family f, int t, int order) {
  switch (f) {
    case Family::Sc: return sc_coeffs(order);
    case Family::ScT: return sc_t_coeffs(t, order);
    case Family::CT: return c_t_coeffs(t, order);
    case Family::Phat: return phat_coeffs(t, order);
    case Family::P: return p_coeffs(order);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

std::shared_ptr<const TruncatedSeries> SeriesStore::get(Family f, int t, int order) {
  require_order(order);
  if (!family_has_t(f)) t = 0;
  const auto key = std::make_pair(f, t);
  std::shared_ptr<SeriesBackend> backend;
  {
    std::lock_guard lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end() && it->second->order() >= order) return it->second;
    backend = backend_;
  }

  std::shared_ptr<const TruncatedSeries> fresh;
  if (backend) {
    if (auto loaded = backend->load(f, t, order)) fresh = std::make_shared<const TruncatedSeries>(std::move(*loaded));
  }
  if (!fresh) {
    fresh = std::make_shared<const TruncatedSeries>(compute_family(f, t, order));
    if (backend) backend->store(f, t, *fresh);
  }

  std::lock_guard lock(mu_);
  auto& slot = memo_[key];
  if (!slot || slot->order() < fresh->order()) slot = fresh;
  return slot;
}

void SeriesStore::clear() {
  std::lock_guard lock(mu_);
  memo_.clear();
}

void SeriesStore::set_backend(std::shared_ptr<SeriesBackend> backend) {
  std::lock_guard lock(mu_);
  backend_ = std::move(backend);
  memo_.clear();
}

SeriesStore& default_store() {
  static SeriesStore store;
  return store;
}

void set_default_backend(std::shared_ptr<SeriesBackend> backend) { default_store().set_backend(std::move(backend)); }

}  // namespace sccore
