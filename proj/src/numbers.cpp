#include "ecat/numbers.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecat {

namespace {

// Row n holds A_{0,n} .. A_{n-1,n}. Rows are only appended, under the
// exclusive lock, and read under the shared lock.
class EulerianTable {
 public:
  ExactCount get(long m, long n) {
    if (n <= 0) throw std::invalid_argument("Eulerian numbers need n >= 1, got " + std::to_string(n));
    if (m < 0 || m >= n) return 0;
    {
      std::shared_lock lock(mutex_);
      if (static_cast<long>(rows_.size()) >= n) return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m)];
    }
    std::unique_lock lock(mutex_);
    extend_to(n);
    return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m)];
  }

 private:
  void extend_to(long n) {
    if (rows_.empty()) rows_.push_back({ExactCount(1)});
    while (static_cast<long>(rows_.size()) < n) {
      const auto& prev = rows_.back();
      const long len = static_cast<long>(rows_.size()) + 1;
      std::vector<ExactCount> row(static_cast<std::size_t>(len));
      for (long m = 0; m < len; ++m) {
        ExactCount value = 0;
        if (m >= 1) value += (len - m) * prev[static_cast<std::size_t>(m - 1)];
        if (m < len - 1) value += (m + 1) * prev[static_cast<std::size_t>(m)];
        row[static_cast<std::size_t>(m)] = std::move(value);
      }
      rows_.push_back(std::move(row));
    }
  }

  std::shared_mutex mutex_;
  std::vector<std::vector<ExactCount>> rows_;
};

EulerianTable& table() {
  static EulerianTable instance;
  return instance;
}

ExactCount exact_quotient(const ExactCount& numerator, long divisor, const char* what) {
  ExactCount q;
  ExactCount r;
  boost::multiprecision::divide_qr(numerator, ExactCount(divisor), q, r);
  if (r != 0) {
    throw std::logic_error(std::string(what) + ": " + to_decimal(numerator) +
                           " is not divisible by " + std::to_string(divisor));
  }
  return q;
}

}  // namespace

ExactCount eulerian(long m, long n) { return table().get(m, n); }

ExactCount eulerian_catalan(long n) {
  if (n < 0) throw std::invalid_argument("EC_n needs n >= 0");
  return exact_quotient(eulerian(n, 2 * n + 1), n + 1, "Eulerian-Catalan");
}

ExactCount fuss_eulerian_catalan(long k, long n) {
  if (k < 2) throw std::invalid_argument("Fuss Eulerian-Catalan numbers need k >= 2");
  if (n < 0) throw std::invalid_argument("Fuss Eulerian-Catalan numbers need n >= 0");
  return exact_quotient(eulerian(n, k * n + k - 1), n + 1, "Fuss Eulerian-Catalan");
}

ExactCount binomial(long n, long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  ExactCount out = 1;
  for (long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

ExactCount factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  ExactCount out = 1;
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

ExactCount catalan(long n) {
  if (n < 0) throw std::invalid_argument("Catalan numbers need n >= 0");
  return exact_quotient(binomial(2 * n, n), n + 1, "Catalan");
}

}  // namespace ecat
