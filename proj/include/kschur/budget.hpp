#pragma once

#include <stdexcept>

namespace kschur {

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("budget") {}
};

// Node cap for the exhaustive searches; exceeding throws instead of truncating.
class SearchBudget {
  public:
    explicit SearchBudget(long long limit) : limit_(limit) {
        if (limit < 1) throw std::invalid_argument("budget must be >= 1");
    }
    void charge(long long n = 1) {
        used_ += n;
        if (used_ > limit_) throw BudgetExceeded();
    }
    long long used() const { return used_; }

  private:
    long long limit_;
    long long used_ = 0;
};

}  // namespace kschur
