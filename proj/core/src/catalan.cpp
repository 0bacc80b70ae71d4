#include "loopless/catalan.hpp"

#include <cassert>
#include <stdexcept>

namespace loopless {

CatalanCursor::CatalanCursor(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("catalan cursor: n must be >= 1");
  value_.assign(n + 2, 1);
  dir_.assign(n + 2, 1);
  up_.resize(n + 2);
  for (int i = 0; i <= n; ++i) up_[i] = i;
  pending_.assign(n + 2, 0);
  chain_top_.assign(n + 2, 0);
  chain_bot_.assign(n + 2, 0);
  counts_.assign(n + 2, 0);
  counts_[1] = n;
  groups_.reserve(n + 1);
}

bool CatalanCursor::is_stale(int level) const {
  if (groups_.empty()) return false;
  const Group& top = groups_.back();
  return top.lo <= level && level <= top.cursor;
}

int CatalanCursor::value_of(int level) const {
  return is_stale(level) ? groups_.back().value : value_[level];
}

bool CatalanCursor::advance() {
  if (exhausted_) return false;
  const int i = up_[n_];
  up_[n_] = n_;
  if (i <= 1) {  // level 1 is pinned to value 1; reaching it ends the run
    exhausted_ = true;
    return false;
  }
  // a parked level moves for the first time since its restart
  if (!groups_.empty()) {
    Group& top = groups_.back();
    if (top.lo <= i && i <= top.cursor) {
      assert(i == top.cursor);
      value_[i] = top.value;
      if (--top.cursor < top.lo) groups_.pop_back();
    }
  }
  const int x = value_[i];
  const int d = dir_[i];
  const int xn = x + d;
  // levels right below that finished descending runs restart at xn with us
  int m = 0;
  if (i < n_ && pending_[i + 1] && dir_[i + 1] > 0 && !is_stale(i + 1)) {
    const int top = chain_top_[i + 1];
    m = chain_bot_[top] - i;
    chain_bot_[top] = i - 1;  // whatever is left of the chain above us
  }
  assert(m >= 0);
  counts_[x] -= 1 + m;
  counts_[xn] += 1 + m;
  value_[i] = xn;
  pending_[i] = false;
  // last-child test must look at the old stack top, so push after it
  const bool last = (d > 0 && xn == i) || (d < 0 && xn == value_of(i - 1));
  if (m > 0) groups_.push_back(Group{i + 1, i + m, xn});
  if (last) {
    up_[i] = up_[i - 1];
    up_[i - 1] = i - 1;
    dir_[i] = -d;
    pending_[i] = true;
    if (d < 0) {  // descent ended: join the chain above or start a new one
      if (pending_[i - 1] && dir_[i - 1] > 0 && !is_stale(i - 1)) {
        const int top = chain_top_[i - 1];
        chain_top_[i] = top;
        chain_bot_[top] = i;
      } else {
        chain_top_[i] = i;
        chain_bot_[i] = i;
      }
    }
  }
  return true;
}

std::vector<int> CatalanCursor::sequence() const {
  std::vector<int> out;
  out.reserve(n_);
  for (int v = 1; v <= n_; ++v)
    out.insert(out.end(), counts_[v], v);
  return out;
}

std::optional<std::vector<int>> StandardSequences::next() {
  if (!started_) {
    started_ = true;
    return cursor_.sequence();
  }
  if (!cursor_.advance()) return std::nullopt;
  return cursor_.sequence();
}

}  // namespace loopless
