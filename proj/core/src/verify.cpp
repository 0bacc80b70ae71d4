#include "loopless/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <vector>

#include "loopless/combination.hpp"
#include "loopless/counting.hpp"
#include "loopless/johnson_trotter.hpp"
#include "loopless/multiperm.hpp"
#include "loopless/oracle.hpp"
#include "loopless/parking.hpp"

namespace loopless {

namespace {

std::string seq_str(std::span<const int> s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ' ';
    out << s[i];
  }
  return out.str();
}

VerifyReport fail(std::uint64_t objects, const std::string& what) {
  return VerifyReport{false, objects, what};
}

VerifyReport compare_with_oracle(std::vector<std::vector<int>> emitted,
                                 std::vector<std::vector<int>> expected,
                                 const char* kind) {
  const std::uint64_t objects = emitted.size();
  std::sort(emitted.begin(), emitted.end());
  for (std::size_t i = 1; i < emitted.size(); ++i)
    if (emitted[i] == emitted[i - 1])
      return fail(objects, std::string(kind) + ": duplicate object " + seq_str(emitted[i]));
  if (emitted.size() != expected.size())
    return fail(objects, std::string(kind) + ": emitted " + std::to_string(emitted.size()) +
                             " objects, oracle has " + std::to_string(expected.size()));
  for (std::size_t i = 0; i < emitted.size(); ++i)
    if (emitted[i] != expected[i])
      return fail(objects, std::string(kind) + ": set mismatch near " + seq_str(emitted[i]) +
                               " vs " + seq_str(expected[i]));
  return VerifyReport{true, objects, {}};
}

}  // namespace

VerifyReport verify_permutations(int n) {
  auto expected = oracle::brute_permutations(n);
  JohnsonTrotter gen(n);
  std::vector<std::vector<int>> emitted;
  std::vector<DeltaEvent> deltas;
  emitted.emplace_back(gen.current().begin(), gen.current().end());
  while (auto ev = gen.next()) {
    if (std::abs(ev->from - ev->to) != 1)
      return fail(emitted.size(), "perm: non-adjacent transposition " +
                                      std::to_string(ev->from) + "->" + std::to_string(ev->to));
    deltas.push_back(*ev);
    emitted.emplace_back(gen.current().begin(), gen.current().end());
  }
  if (emitted.size() != checked_factorial(n))
    return fail(emitted.size(), "perm: expected " + std::to_string(checked_factorial(n)) +
                                    " objects, got " + std::to_string(emitted.size()));
  // replay the delta stream
  Permutation replay = emitted.front();
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    replay = apply_delta(std::move(replay), deltas[i]);
    if (replay != emitted[i + 1])
      return fail(emitted.size(), "perm: delta replay diverges at step " + std::to_string(i + 1));
  }
  return compare_with_oracle(std::move(emitted), std::move(expected), "perm");
}

VerifyReport verify_combinations(int n, int r) {
  auto expected = oracle::brute_combinations(n, r);
  CombinationGenerator gen(n, r);
  std::vector<std::vector<int>> containers;  // in-place slot order
  std::vector<CombinationGenerator<>::ValueMove> moves;
  containers.emplace_back(gen.current().begin(), gen.current().end());
  while (auto mv = gen.next()) {
    moves.push_back(*mv);
    containers.emplace_back(gen.current().begin(), gen.current().end());
  }
  const std::uint64_t objects = containers.size();
  if (!gen.run_complete()) return fail(objects, "comb: run not marked complete");
  if (objects != checked_binomial(r, n))
    return fail(objects, "comb: expected " + std::to_string(checked_binomial(r, n)) +
                             " combinations, got " + std::to_string(objects));

  auto bits_of = [&](const std::vector<int>& c) {
    std::vector<int> bits(r, 0);
    for (int v : c) bits[v - 1] = 1;
    return bits;
  };
  for (std::size_t s = 1; s < containers.size(); ++s) {
    const auto& prev = containers[s - 1];
    const auto& cur = containers[s];
    // exactly one slot changed, and it changed from->to
    int changed = -1;
    for (int j = 0; j < n; ++j)
      if (prev[j] != cur[j]) {
        if (changed != -1)
          return fail(objects, "comb: two slots changed between " + seq_str(prev) + " and " +
                                   seq_str(cur));
        changed = j;
      }
    if (changed == -1 || prev[changed] != moves[s - 1].from || cur[changed] != moves[s - 1].to)
      return fail(objects, "comb: reported move does not match containers at step " +
                               std::to_string(s));
    // block move: the 1 crosses only consecutive 1s, 0 order preserved
    auto pb = bits_of(prev);
    const int lo = std::min(moves[s - 1].from, moves[s - 1].to);
    const int hi = std::max(moves[s - 1].from, moves[s - 1].to);
    for (int p = lo + 1; p < hi; ++p)
      if (!pb[p - 1])
        return fail(objects, "comb: moved 1 crossed a 0 between " + seq_str(prev) + " and " +
                                 seq_str(cur));
  }
  // forward endpoints: starts packed left, ends packed right
  {
    auto first = bits_of(containers.front());
    auto last = bits_of(containers.back());
    for (int j = 0; j < n; ++j)
      if (!first[j] || !last[r - 1 - j])
        return fail(objects, "comb: run endpoints not packed at the container ends");
  }
  // delta replay over the in-place container, tracking value -> slot
  {
    std::vector<int> replay = containers.front();
    std::map<int, int> slot_of;
    for (int j = 0; j < n; ++j) slot_of[replay[j]] = j;
    for (std::size_t s = 0; s < moves.size(); ++s) {
      auto it = slot_of.find(moves[s].from);
      if (it == slot_of.end())
        return fail(objects, "comb: replay lost value " + std::to_string(moves[s].from));
      const int j = it->second;
      slot_of.erase(it);
      replay[j] = moves[s].to;
      slot_of[moves[s].to] = j;
      if (replay != containers[s + 1])
        return fail(objects, "comb: delta replay diverges at step " + std::to_string(s + 1));
    }
  }
  // reversal: the next run is the exact mirror, and the run after restores it
  gen.reverse_reinit();
  std::vector<std::vector<int>> backward;
  backward.emplace_back(gen.current().begin(), gen.current().end());
  while (gen.next()) backward.emplace_back(gen.current().begin(), gen.current().end());
  std::vector<std::vector<int>> mirrored(containers.rbegin(), containers.rend());
  if (backward != mirrored) return fail(objects, "comb: backward run is not the reversed forward run");
  gen.reverse_reinit();
  std::vector<std::vector<int>> forward_again;
  forward_again.emplace_back(gen.current().begin(), gen.current().end());
  while (gen.next()) forward_again.emplace_back(gen.current().begin(), gen.current().end());
  if (forward_again != containers)
    return fail(objects, "comb: third run does not reproduce the forward order");

  // value sets against the oracle
  std::vector<std::vector<int>> emitted;
  emitted.reserve(containers.size());
  for (auto& c : containers) {
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    emitted.push_back(std::move(sorted));
  }
  return compare_with_oracle(std::move(emitted), std::move(expected), "comb");
}

VerifyReport verify_multiset_perms(const MultisetSpec& spec) {
  auto expected = oracle::brute_multiset_perms(spec);
  MultisetPermutation gen(spec);
  const int k = spec.class_count();
  std::vector<std::vector<int>> emitted;
  std::vector<DeltaEvent> deltas;
  emitted.emplace_back(gen.current().begin(), gen.current().end());
  while (auto ev = gen.next()) {
    deltas.push_back(*ev);
    const std::vector<int> prev = emitted.back();  // emplace below may reallocate
    if (ev->moved_value >= k)
      return fail(emitted.size(), "multiperm: class " + std::to_string(ev->moved_value) +
                                      " moved actively");
    const int lo = std::min(ev->from, ev->to);
    const int hi = std::max(ev->from, ev->to);
    const int a = prev[lo - 1];
    const int b = prev[hi - 1];
    if (std::min(a, b) != ev->moved_value)
      return fail(emitted.size(), "multiperm: mover is not the smaller swapped value at " +
                                      seq_str(prev));
    for (int p = lo + 1; p < hi; ++p)
      if (prev[p - 1] != ev->moved_value)
        return fail(emitted.size(),
                    "multiperm: block between swap positions broken at " + seq_str(prev));
    emitted.emplace_back(gen.current().begin(), gen.current().end());
    // Gray property: exactly the two reported positions changed
    const auto& cur = emitted.back();
    for (int p = 1; p <= spec.total_size(); ++p) {
      const bool swapped = p == ev->from || p == ev->to;
      if ((prev[p - 1] != cur[p - 1]) != swapped)
        return fail(emitted.size(), "multiperm: container changed outside the swap at step " +
                                        std::to_string(emitted.size() - 1));
    }
  }
  if (emitted.size() != permutation_count(spec))
    return fail(emitted.size(), "multiperm: expected " + std::to_string(permutation_count(spec)) +
                                    " objects, got " + std::to_string(emitted.size()));
  Permutation replay = emitted.front();
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    replay = apply_delta(std::move(replay), deltas[i]);
    if (replay != emitted[i + 1])
      return fail(emitted.size(),
                  "multiperm: delta replay diverges at step " + std::to_string(i + 1));
  }
  return compare_with_oracle(std::move(emitted), std::move(expected), "multiperm");
}

VerifyReport verify_parking(int n) {
  auto expected = oracle::brute_parking_functions(n);
  ParkingGenerator gen(n);
  std::vector<std::vector<int>> emitted;
  emitted.emplace_back(gen.current().begin(), gen.current().end());
  int max_charge = 0;
  std::vector<int> replay(gen.current().begin(), gen.current().end());
  while (auto step = gen.next()) {
    max_charge = std::max(max_charge, gen.last_prep_charge());
    emitted.emplace_back(gen.current().begin(), gen.current().end());
    if (step->new_block) {
      replay.assign(gen.current().begin(), gen.current().end());
      // block starts are the standard sequence itself: sorted
      if (!std::is_sorted(replay.begin(), replay.end()))
        return fail(emitted.size(), "parking: block does not start at its sorted sequence");
    } else {
      Permutation moved = apply_delta(std::move(replay),
                                      DeltaEvent{step->from, step->to, 0});
      replay = std::move(moved);
    }
    if (replay != emitted.back())
      return fail(emitted.size(), "parking: delta replay diverges at object " +
                                      std::to_string(emitted.size()));
    if (!is_parking_function(emitted.back()))
      return fail(emitted.size(), "parking: emitted non-parking function " +
                                      seq_str(emitted.back()));
  }
  if (max_charge > gen.prep_budget())
    return fail(emitted.size(), "parking: prep charge " + std::to_string(max_charge) +
                                    " exceeded budget " + std::to_string(gen.prep_budget()));
  // grouping: outputs sharing a multiset are contiguous
  {
    std::vector<std::vector<int>> seen_multisets;
    std::vector<int> prev_key;
    for (auto& p : emitted) {
      auto key = p;
      std::sort(key.begin(), key.end());
      if (key != prev_key) {
        if (std::find(seen_multisets.begin(), seen_multisets.end(), key) != seen_multisets.end())
          return fail(emitted.size(), "parking: multiset block split around " + seq_str(p));
        seen_multisets.push_back(key);
        prev_key = std::move(key);
      }
    }
  }
  return compare_with_oracle(std::move(emitted), std::move(expected), "parking");
}

}  // namespace loopless
