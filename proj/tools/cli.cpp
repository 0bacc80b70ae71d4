#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>

#include "loopless/catalan.hpp"
#include "loopless/combination.hpp"
#include "loopless/counting.hpp"
#include "loopless/johnson_trotter.hpp"
#include "loopless/multiperm.hpp"
#include "loopless/multiset.hpp"
#include "loopless/oracle.hpp"
#include "loopless/parking.hpp"
#include "loopless/verify.hpp"

namespace loopless::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

void print_seq(std::ostream& out, std::span<const int> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ' ';
    out << s[i];
  }
  out << '\n';
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int expect_params(const std::vector<int>& params, std::size_t count, const char* what) {
  if (params.size() != count)
    throw UsageError(std::string(what) + ": expected " + std::to_string(count) +
                     " parameter(s), got " + std::to_string(params.size()));
  return params[0];
}

// The closed-form object count doubles as the overflow refusal: a spec whose
// cardinality does not fit 64 bits is rejected up front.
std::uint64_t object_count(const std::string& kind, const std::vector<int>& params) {
  if (kind == "perm") return checked_factorial(expect_params(params, 1, "perm"));
  if (kind == "comb") {
    expect_params(params, 2, "comb");
    if (params[0] < 1 || params[0] > params[1])
      throw UsageError("comb: need 1 <= n <= r");
    return checked_binomial(params[1], params[0]);
  }
  if (kind == "multiperm") {
    if (params.empty()) throw UsageError("multiperm: expected at least one multiplicity");
    MultisetSpec spec(params);  // validates entries and the size cap
    return permutation_count(spec);
  }
  if (kind == "parking") {
    const int n = expect_params(params, 1, "parking");
    if (n < 1) throw UsageError("parking: n must be >= 1");
    return checked_parking_count(n);
  }
  throw UsageError("unknown kind '" + kind + "' (perm|comb|multiperm|parking)");
}

template <typename Gen, typename NextFn>
void stream_objects(std::ostream& out, const std::string& format, Gen& gen, NextFn next) {
  print_seq(out, gen.current());
  if (format == "full") {
    while (next(gen, out, false)) print_seq(out, gen.current());
  } else {
    while (next(gen, out, true)) {
    }
  }
}

int gen_perm(int n, const std::string& format, std::ostream& out) {
  JohnsonTrotter gen(n);
  auto step = [](JohnsonTrotter<>& g, std::ostream& o, bool delta) {
    auto ev = g.next();
    if (!ev) return false;
    if (delta) o << "s " << ev->from << ' ' << ev->to << '\n';
    return true;
  };
  stream_objects(out, format, gen, step);
  return kOk;
}

int gen_comb(int n, int r, const std::string& format, std::ostream& out) {
  CombinationGenerator gen(n, r);
  // delta lines carry values: the slot holding `from` now holds `to`
  auto step = [](CombinationGenerator<>& g, std::ostream& o, bool delta) {
    auto mv = g.next();
    if (!mv) return false;
    if (delta) o << "s " << mv->from << ' ' << mv->to << '\n';
    return true;
  };
  stream_objects(out, format, gen, step);
  return kOk;
}

int gen_multiperm(const std::vector<int>& mults, const std::string& format, std::ostream& out) {
  MultisetPermutation gen((MultisetSpec(mults)));
  auto step = [](MultisetPermutation<>& g, std::ostream& o, bool delta) {
    auto ev = g.next();
    if (!ev) return false;
    if (delta) o << "s " << ev->from << ' ' << ev->to << '\n';
    return true;
  };
  stream_objects(out, format, gen, step);
  return kOk;
}

int gen_parking(int n, const std::string& format, std::ostream& out) {
  ParkingGenerator gen(n);
  // block boundaries change the whole object, so delta mode re-seeds with a
  // fresh object line at each block start
  print_seq(out, gen.current());
  while (auto step = gen.next()) {
    if (format == "full" || step->new_block)
      print_seq(out, gen.current());
    else
      out << "s " << step->from << ' ' << step->to << '\n';
  }
  return kOk;
}

}  // namespace

int run_gen(const std::string& kind, const std::vector<int>& params,
            const std::string& format, std::ostream& out, std::ostream& err) {
  try {
    if (format != "full" && format != "delta" && format != "count")
      throw UsageError("unknown format '" + format + "' (full|delta|count)");
    const std::uint64_t count = object_count(kind, params);
    if (format == "count") {
      out << count << '\n';
      return kOk;
    }
    if (kind == "perm") return gen_perm(params[0], format, out);
    if (kind == "comb") return gen_comb(params[0], params[1], format, out);
    if (kind == "multiperm") return gen_multiperm(params, format, out);
    return gen_parking(params[0], format, out);
  } catch (const std::overflow_error& e) {
    err << "gen: refusing spec, " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "gen: " << e.what() << '\n';
    return kUsage;
  }
}

int run_verify(const std::string& kind, const std::vector<int>& params,
               std::ostream& out, std::ostream& err) {
  try {
    VerifyReport report;
    if (kind == "perm") {
      report = verify_permutations(expect_params(params, 1, "perm"));
    } else if (kind == "comb") {
      expect_params(params, 2, "comb");
      report = verify_combinations(params[0], params[1]);
    } else if (kind == "multiperm") {
      if (params.empty()) throw UsageError("multiperm: expected at least one multiplicity");
      report = verify_multiset_perms(MultisetSpec(params));
    } else if (kind == "parking") {
      report = verify_parking(expect_params(params, 1, "parking"));
    } else {
      throw UsageError("unknown kind '" + kind + "' (perm|comb|multiperm|parking)");
    }
    if (report.pass) {
      out << "verify " << kind << ": pass, " << report.objects << " objects\n";
      return kOk;
    }
    out << "verify " << kind << ": FAIL after " << report.objects
        << " objects: " << report.failure << '\n';
    return kFail;
  } catch (const oracle::GuardError& e) {
    err << "verify: " << e.what() << " (pick a smaller size)\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << '\n';
    return kUsage;
  }
}

namespace {

struct BenchTotals {
  std::uint64_t objects = 0;
  std::uint64_t steps = 0;
  std::uint64_t ops = 0;
  std::uint64_t max_step_ops = 0;
  int max_prep_charge = -1;  // parking only
};

void bench_perm(int n, BenchTotals& t) {
  JohnsonTrotter<OpCounter> gen(n);
  ++t.objects;
  std::uint64_t prev = 0;
  while (gen.next()) {
    const std::uint64_t now = gen.ops().total();
    t.max_step_ops = std::max(t.max_step_ops, now - prev);
    prev = now;
    ++t.objects;
    ++t.steps;
  }
  t.ops += prev;
}

void bench_comb(int n, int r, BenchTotals& t) {
  CombinationGenerator<OpCounter> gen(n, r);
  ++t.objects;
  std::uint64_t prev = 0;
  while (gen.next()) {
    const std::uint64_t now = gen.ops().total();
    t.max_step_ops = std::max(t.max_step_ops, now - prev);
    prev = now;
    ++t.objects;
    ++t.steps;
  }
  t.ops += prev;
}

void bench_multiperm(const MultisetSpec& spec, BenchTotals& t) {
  MultisetPermutation<OpCounter> gen(spec);
  ++t.objects;
  std::uint64_t prev = 0;
  while (gen.next()) {
    const std::uint64_t now = gen.op_total();
    t.max_step_ops = std::max(t.max_step_ops, now - prev);
    prev = now;
    ++t.objects;
    ++t.steps;
  }
  t.ops += prev;
}

void bench_parking(int n, BenchTotals& t) {
  ParkingGenerator gen(n);
  ++t.objects;
  t.max_prep_charge = 0;
  while (gen.next()) {
    t.max_prep_charge = std::max(t.max_prep_charge, gen.last_prep_charge());
    ++t.objects;
    ++t.steps;
  }
}

}  // namespace

int run_bench(const std::string& kind, const std::vector<int>& params, int reps,
              std::ostream& out, std::ostream& err) {
  try {
    if (reps < 1) throw UsageError("bench: --reps must be >= 1");
    const std::uint64_t expected = object_count(kind, params);
    BenchTotals t;
    const auto start = std::chrono::steady_clock::now();
    for (int rep = 0; rep < reps; ++rep) {
      BenchTotals one;
      one.max_prep_charge = t.max_prep_charge;
      if (kind == "perm")
        bench_perm(params[0], one);
      else if (kind == "comb")
        bench_comb(params[0], params[1], one);
      else if (kind == "multiperm")
        bench_multiperm(MultisetSpec(params), one);
      else
        bench_parking(params[0], one);
      if (one.objects != expected) {
        err << "bench: emitted " << one.objects << " objects, closed form says "
            << expected << '\n';
        return kFail;
      }
      t.objects += one.objects;
      t.steps += one.steps;
      t.ops += one.ops;
      t.max_step_ops = std::max(t.max_step_ops, one.max_step_ops);
      t.max_prep_charge = std::max(t.max_prep_charge, one.max_prep_charge);
    }
    const auto stop = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(stop - start).count();

    out << "bench " << kind;
    for (int p : params) out << ' ' << p;
    out << '\n';
    out << "objects per rep: " << expected << " (count verified)\n";
    out << "reps: " << reps << '\n';
    if (kind == "parking") {
      out << "prep micro-steps per output: max " << t.max_prep_charge << '\n';
    } else if (t.steps > 0) {
      out << "step ops: max " << t.max_step_ops << ", mean "
          << static_cast<double>(t.ops) / static_cast<double>(t.steps) << '\n';
    } else {
      out << "step ops: none (single object)\n";
    }
    out << "wall time: " << seconds << " s";
    if (seconds > 0)
      out << " (" << static_cast<double>(t.objects) / seconds / 1e6 << " Mobj/s)";
    out << '\n';
    return kOk;
  } catch (const std::overflow_error& e) {
    err << "bench: refusing spec, " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "bench: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace loopless::cli
