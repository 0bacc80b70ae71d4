#include "loopless/parking.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace loopless {

bool is_parking_function(std::span<const int> lots) {
  const int n = static_cast<int>(lots.size());
  std::vector<char> occupied(n + 2, 0);
  for (int i = 0; i < n; ++i) {
    int lot = lots[i];
    if (lot < 1 || lot > n)
      throw std::invalid_argument("parking: entry " + std::to_string(lot) +
                                  " outside 1.." + std::to_string(n));
    while (lot <= n && occupied[lot]) ++lot;
    if (lot > n) return false;
    occupied[lot] = 1;
  }
  return true;
}

ParkingGenerator::ParkingGenerator(int n, int prep_budget)
    : n_(n), budget_(prep_budget), cursor_(n) {
  if (n < 1) throw std::invalid_argument("parking generator: n must be >= 1");
  if (prep_budget < 1) throw std::invalid_argument("parking generator: budget must be >= 1");
  active_ = std::make_unique<Buffer>(n);
  standby_ = std::make_unique<Buffer>(n);
  // O(n) setup: build the first block, and the second when there is one, so
  // the 1-output all-ones block never has to amortize anything.
  prep_begin();
  while (prep_active_) prep_one();
  prep_finished();
  std::swap(active_, standby_);
  standby_ready_ = false;
  if (cursor_live_) {
    prep_begin();
    cursor_live_ = false;
    while (prep_active_) prep_one();
    prep_finished();
  }
  prep_charge_ = 0;
}

void ParkingGenerator::prep_begin() {
  standby_->gen.begin_refill(n_);
  prep_phase_ = PrepPhase::kScan;
  prep_scan_v_ = 1;
  prep_classes_ = 0;
  prep_lots_j_ = 1;
  prep_active_ = true;
}

void ParkingGenerator::prep_one() {
  assert(prep_active_);
  switch (prep_phase_) {
    case PrepPhase::kScan: {
      const int v = prep_scan_v_++;
      const int m = cursor_.count_of(v);
      if (m > 0) {
        standby_->gen.refill_add_class(m);
        standby_->class_value[++prep_classes_] = v;
      }
      if (prep_scan_v_ > n_) prep_phase_ = PrepPhase::kRefill;
      return;
    }
    case PrepPhase::kRefill: {
      if (standby_->gen.refill_step()) prep_phase_ = PrepPhase::kLots;
      return;
    }
    case PrepPhase::kLots: {
      const int j = prep_lots_j_++;
      standby_->lots[j] = standby_->class_value[standby_->gen.current()[j - 1]];
      if (prep_lots_j_ > n_) {
        prep_phase_ = PrepPhase::kDone;
        prep_active_ = false;
      }
      return;
    }
    case PrepPhase::kDone:
      prep_active_ = false;
      return;
  }
}

void ParkingGenerator::prep_finished() {
  standby_ready_ = true;
  cursor_live_ = cursor_.advance();  // stage the block after this one
}

std::optional<ParkingGenerator::Step> ParkingGenerator::next() {
  if (exhausted_) return std::nullopt;
  prep_charge_ = 0;
  if (prep_active_) {
    while (prep_charge_ < budget_ && prep_active_) {
      prep_one();
      ++prep_charge_;
    }
    if (!prep_active_) prep_finished();
  }
  if (auto ev = active_->gen.next()) {
    std::swap(active_->lots[ev->from], active_->lots[ev->to]);
    return Step{false, ev->from, ev->to};
  }
  if (!standby_ready_) {
    if (!prep_active_) {
      exhausted_ = true;
      return std::nullopt;
    }
    // The budget arithmetic makes this unreachable; finishing eagerly keeps
    // the enumeration correct and lets the instrumented charge expose any
    // budget violation honestly.
    while (prep_active_) {
      prep_one();
      ++prep_charge_;
    }
    prep_finished();
  }
  std::swap(active_, standby_);
  standby_ready_ = false;
  if (cursor_live_) {
    prep_begin();
    cursor_live_ = false;
  }
  return Step{true, 0, 0};
}

}  // namespace loopless
