#include "loopless/multiset.hpp"

#include <stdexcept>
#include <string>

namespace loopless {

MultisetSpec::MultisetSpec(std::span<const int> multiplicities, int max_total_size) {
  if (multiplicities.empty())
    throw std::invalid_argument("multiset spec: multiplicity sequence is empty");
  k_ = static_cast<int>(multiplicities.size());
  mults_.assign(k_ + 1, 0);
  base_.assign(k_ + 1, 0);
  limit_.assign(k_ + 1, 0);
  for (int i = 1; i <= k_; ++i) {
    const int n = multiplicities[i - 1];
    if (n < 1)
      throw std::invalid_argument("multiset spec: multiplicity of class " +
                                  std::to_string(i) + " is " + std::to_string(n) +
                                  ", must be >= 1");
    mults_[i] = n;
    total_ += n;
  }
  if (total_ > max_total_size)
    throw std::invalid_argument("multiset spec: total size " + std::to_string(total_) +
                                " exceeds limit " + std::to_string(max_total_size));
  for (int i = 2; i <= k_; ++i) base_[i] = base_[i - 1] + mults_[i - 1];
  for (int i = 1; i <= k_; ++i) limit_[i] = total_ - base_[i];
}

MultisetSpec::MultisetSpec(std::initializer_list<int> multiplicities, int max_total_size)
    : MultisetSpec(std::span<const int>(multiplicities.begin(), multiplicities.size()),
                   max_total_size) {}

Permutation MultisetSpec::sorted_container() const {
  Permutation out;
  out.reserve(total_);
  for (int cls = 1; cls <= k_; ++cls)
    out.insert(out.end(), mults_[cls], cls);
  return out;
}

Permutation apply_delta(Permutation p, const DeltaEvent& event) {
  const int n = static_cast<int>(p.size());
  if (event.from < 1 || event.from > n || event.to < 1 || event.to > n)
    throw std::out_of_range("apply_delta: position outside 1.." + std::to_string(n));
  if (event.from == event.to)
    throw std::invalid_argument("apply_delta: from == to");
  int& a = p[event.from - 1];
  int& b = p[event.to - 1];
  if (a == b)
    throw std::invalid_argument("apply_delta: equal values at both positions");
  std::swap(a, b);
  return p;
}

}  // namespace loopless
