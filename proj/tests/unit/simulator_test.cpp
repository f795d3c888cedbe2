#include "midloc/simulator.hpp"

#include <gtest/gtest.h>

#include "generators.hpp"
#include "midloc/digits.hpp"
#include "midloc/errors.hpp"
#include "midloc/primes.hpp"
#include "midloc/trace_io.hpp"

namespace midloc {
namespace {

const StrategyKind kConverge = strategy::Converge{};
const StrategyKind kAlgebraic = strategy::Algebraic{};
const StrategyKind kEpsOmit = strategy::EpsOmit{Rational(1, 10)};
const StrategyKind kOneBit = strategy::OneBit{};
const StrategyKind kNonCantor = strategy::NonCantor{};

Instance<Rational> inst(Rational d, Rational x) { return {std::move(d), std::move(x), std::nullopt}; }

RunOptions cap(std::size_t max_steps, int bit = 0) {
  RunOptions o;
  o.max_steps = max_steps;
  o.initial_bit = MemoryBit(bit);
  return o;
}

template <class Num>
void expect_consistent(const Trace<Num>& trace) {
  ASSERT_FALSE(trace.steps.empty());
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    ASSERT_EQ(step.t, i);
    ASSERT_LE(step.position, trace.instance.half_length);
    ASSERT_GE(step.position, -trace.instance.half_length);
    if (i + 1 < trace.steps.size()) {
      ASSERT_EQ(step.position + step.displacement, trace.steps[i + 1].position);
      ASSERT_FALSE(is_quit(step.observation));
    }
  }
  if (const auto* h = std::get_if<Halted>(&trace.outcome)) {
    ASSERT_EQ(h->steps + 1, trace.steps.size());
    ASSERT_TRUE(is_quit(trace.steps.back().observation));
    ASSERT_EQ(trace.final_position, trace.steps.back().position);
  } else {
    const auto& last = trace.steps.back();
    ASSERT_EQ(trace.final_position, last.position + last.displacement);
  }
}

TEST(SimulatorTest, AlgebraicLandsInSevenSteps) {
  const Instance<EExtNumber> i{EExtNumber(Rational(2)), EExtNumber(Rational(-2)), std::nullopt};
  const auto trace = run(kAlgebraic, i, cap(100));
  expect_consistent(trace);
  EXPECT_EQ(trace.outcome, Outcome(Halted{7}));
  EXPECT_EQ(trace.final_position, EExtNumber());
  for (std::size_t t = 0; t < 6; ++t) EXPECT_EQ(trace.steps[t].displacement, EExtNumber::inverse_e());
  EXPECT_EQ(trace.steps[6].displacement, EExtNumber(Rational(2), Rational(-6)));
}

TEST(SimulatorTest, OneBitLandsInFourSteps) {
  for (int bit : {0, 1}) {
    const auto trace = run(kOneBit, inst(Rational(13, 5), Rational(-13, 5)), cap(100, bit));
    expect_consistent(trace);
    EXPECT_EQ(trace.outcome, Outcome(Halted{4})) << bit;
    EXPECT_TRUE(trace.final_position.is_zero());
    EXPECT_EQ(trace.initial_bit, MemoryBit(bit));
    EXPECT_EQ(trace.steps[0].bit, MemoryBit(bit));
  }
}

TEST(SimulatorTest, NonCantorLandsInFourSteps) {
  const auto trace = run(kNonCantor, inst(Rational(5, 2), Rational(-5, 2)), cap(100));
  expect_consistent(trace);
  EXPECT_EQ(trace.outcome, Outcome(Halted{4}));
  EXPECT_TRUE(trace.final_position.is_zero());
}

TEST(SimulatorTest, ConvergeReachesTheBand) {
  Instance<Rational> i = inst(Rational(3, 2), Rational(-3, 2));
  i.quit_radius = Rational(1, 10);
  const auto trace = run(kConverge, i, cap(1'000'000));
  expect_consistent(trace);
  ASSERT_TRUE(trace.halted());
  EXPECT_LE(trace.final_position.abs(), Rational(1, 10));
}

TEST(SimulatorTest, PsiExamples) {
  Instance<Rational> e = inst(Rational(41, 10), Rational(-41, 10));
  EXPECT_EQ(psi(kEpsOmit, e, cap(1000)), PsiResult(std::size_t{7}));
  for (const StrategyKind& k : {kEpsOmit, kOneBit, kNonCantor}) {
    EXPECT_EQ(psi(k, inst(Rational(2), Rational(0))), PsiResult(std::size_t{0}));
  }
  const Instance<EExtNumber> zero{EExtNumber(Rational(2)), EExtNumber(), std::nullopt};
  EXPECT_EQ(psi(kAlgebraic, zero), PsiResult(std::size_t{0}));
  Instance<Rational> c = inst(Rational(2), Rational(0));
  c.quit_radius = Rational(1, 10);
  EXPECT_EQ(psi(kConverge, c), PsiResult(std::size_t{0}));
  Instance<Rational> far = inst(Rational(100), Rational(-100));
  far.quit_radius = Rational(1, 1000);
  EXPECT_EQ(psi(kConverge, far, cap(100)), PsiResult(Timeout{100}));
}

TEST(SimulatorTest, RejectsMismatchedRepresentationsAndRadii) {
  const Instance<EExtNumber> e{EExtNumber(Rational(2)), EExtNumber(Rational(-2)), std::nullopt};
  EXPECT_THROW(run(kOneBit, e), RepresentationMismatch);
  EXPECT_THROW(run(kAlgebraic, inst(Rational(2), Rational(-2))), RepresentationMismatch);
  EXPECT_THROW(run(kConverge, inst(Rational(2), Rational(-2))), InvalidInstance);
  Instance<Rational> with_radius = inst(Rational(2), Rational(-2));
  with_radius.quit_radius = Rational(1, 10);
  EXPECT_THROW(run(kOneBit, with_radius), InvalidInstance);
  EXPECT_THROW(run(kOneBit, inst(Rational(2), Rational(3))), InvalidInstance);
  EXPECT_THROW(run(kOneBit, inst(Rational(1), Rational(0))), InvalidInstance);
}

TEST(SimulatorTest, RunsAreDeterministic) {
  for (const StrategyKind& k : {kEpsOmit, kOneBit, kNonCantor}) {
    const auto a = run(k, inst(Rational(12, 5), Rational(-1, 3)), cap(500));
    const auto b = run(k, inst(Rational(12, 5), Rational(-1, 3)), cap(500));
    EXPECT_EQ(trace_to_json(a), trace_to_json(b));
  }
}

TEST(SimulatorTest, StepLimitIsReported) {
  const auto trace = run(kOneBit, inst(Rational(13, 5), Rational(-13, 5)), cap(2));
  expect_consistent(trace);
  EXPECT_EQ(trace.outcome, Outcome(StepLimitReached{2}));
  EXPECT_EQ(trace.steps.size(), 2u);
}

TEST(SimulatorTest, EpsOmitLandsExactlyInsideItsDomain) {
  // D with fractional part in [eps, 1 - eps], starts spread over the segment.
  testing::RationalGen gen(601);
  const Rational eps(1, 10);
  int runs = 0;
  while (runs < 400) {
    const Rational d = Rational(gen.integer(1, 12)) + gen.between(eps, Rational(1) - eps, 50);
    const Rational x = gen.between(-d, d, 30);
    ++runs;
    const auto trace = run(kEpsOmit, inst(d, x), cap(10'000));
    ASSERT_TRUE(trace.halted()) << d << " " << x;
    ASSERT_TRUE(trace.final_position.is_zero());
    expect_consistent(trace);
  }
}

TEST(SimulatorTest, OneBitLandsExactlyFromEveryStartAndBit) {
  testing::RationalGen gen(602);
  for (int i = 0; i < 300; ++i) {
    const Rational d = Rational(1) + gen.between(Rational(0), Rational(12), 60);
    const Rational x = i % 5 == 0 ? d : gen.between(-d, d, 40);
    for (int bit : {0, 1}) {
      const auto trace = run(kOneBit, inst(d, x), cap(10'000, bit));
      ASSERT_TRUE(trace.halted()) << d << " " << x << " b0=" << bit;
      ASSERT_TRUE(trace.final_position.is_zero());
      expect_consistent(trace);
    }
  }
}

TEST(SimulatorTest, OneBitParityAtFirstRightObservation) {
  // From the left end, the bit read at the first R observation has the
  // parity of floor(D) + 1.
  testing::RationalGen gen(603);
  for (int i = 0; i < 300; ++i) {
    const Rational d = Rational(1) + gen.between(Rational(0), Rational(15), 60);
    for (int bit : {0, 1}) {
      const auto trace = run(kOneBit, inst(d, -d), cap(10'000, bit));
      for (const auto& step : trace.steps) {
        const auto* seen = std::get_if<Seen<Rational>>(&step.observation);
        if (!seen || seen->side != Side::right) continue;
        ASSERT_TRUE(step.bit);
        ASSERT_EQ(step.bit->value() == 1, !is_odd(d.floor())) << d;
        break;
      }
    }
  }
}

TEST(SimulatorTest, AlgebraicLandsExactlyForRationalHalfLengths) {
  testing::RationalGen gen(604);
  for (int i = 0; i < 100; ++i) {
    const Rational d = Rational(1) + gen.between(Rational(0), Rational(9), 30);
    const Rational x = gen.between(-d, d, 20);
    for (const EExtNumber& start : {EExtNumber(x), EExtNumber(-d), EExtNumber(-d + Rational(1, 3)) + EExtNumber::inverse_e()}) {
      const Instance<EExtNumber> e{EExtNumber(d), start, std::nullopt};
      const auto trace = run(kAlgebraic, e, cap(10'000));
      ASSERT_TRUE(trace.halted()) << d << " " << start;
      ASSERT_EQ(trace.final_position, EExtNumber());
      expect_consistent(trace);
    }
  }
}

TEST(SimulatorTest, AlgebraicIsStuckAtTheRightEnd) {
  // On (R, 0) the fallback move is -d = 0, so the walker never leaves x = D.
  const Instance<EExtNumber> e{EExtNumber(Rational(2)), EExtNumber(Rational(2)), std::nullopt};
  const auto trace = run(kAlgebraic, e, cap(50));
  EXPECT_EQ(trace.outcome, Outcome(StepLimitReached{50}));
  EXPECT_EQ(trace.final_position, EExtNumber(Rational(2)));
}

TEST(SimulatorTest, NonCantorLandsExactlyFromTheLeftHalf) {
  // Non-Cantor fractional parts whose encoded half-distance is also
  // non-Cantor. Starts on the left half avoid digit expansions whose period
  // exceeds the work budget.
  int checked = 0;
  for (long den : {5L, 7L, 11L, 13L}) {
    for (long num = 1; num < den; ++num) {
      const Rational f(num, den);
      const Rational encoded = f < Rational(1, 2) ? f : f - Rational(1, 2);
      if (is_cantor(f) || is_cantor(encoded)) continue;
      for (long whole : {1L, 2L, 5L}) {
        const Rational d = Rational(whole) + f;
        for (const Rational& x : {-d, Rational(-1), -d / Rational(2), Rational(0)}) {
          const auto trace = run(kNonCantor, inst(d, x), cap(10'000));
          ASSERT_TRUE(trace.halted()) << d << " " << x;
          ASSERT_TRUE(trace.final_position.is_zero());
          expect_consistent(trace);
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(SimulatorTest, NonCantorCyclesWhenTheEncodedHalfIsCantor) {
  // frac(23/5) = 3/5 is not a Cantor real, but the value decoded on the L
  // side is 3/5 - 1/2 = 1/10, which is; the guard rejects it and the walker
  // returns to where it started.
  const auto trace = run(kNonCantor, inst(Rational(23, 5), Rational(-23, 5)), cap(14));
  EXPECT_EQ(trace.outcome, Outcome(StepLimitReached{14}));
  EXPECT_EQ(trace.steps[4].position, Rational(-3, 5));
  EXPECT_EQ(trace.steps[7].position, Rational(-3, 5));
  EXPECT_EQ(trace.steps[10].position, Rational(-3, 5));
  EXPECT_EQ(trace.steps[6].position, Rational(-3, 5) + Rational(1, 26568));
}

TEST(SimulatorTest, OutOfDomainInstancesAreUnspecifiedButSafe) {
  // Cantor fractional part for NonCantor, fractional part below eps for
  // EpsOmit: any outcome is allowed, invariant violations are not.
  const auto cantor = run(kNonCantor, inst(Rational(9, 4), Rational(-9, 4)), cap(2000));
  expect_consistent(cantor);
  const auto narrow = run(kEpsOmit, inst(Rational(201, 100), Rational(-201, 100)), cap(2000));
  expect_consistent(narrow);
  const Instance<EExtNumber> transcendental{EExtNumber(Rational(1), Rational(1)), EExtNumber(Rational(-1)),
                                            std::nullopt};
  expect_consistent(run(kAlgebraic, transcendental, cap(2000)));
  Instance<Rational> c = inst(Rational(3), Rational(-3));
  c.quit_radius = Rational(1, 10);
  expect_consistent(run(kConverge, c, cap(2000)));
}

TEST(SimulatorTest, RightStartsCanExceedTheDigitBudget) {
  EXPECT_THROW(run(kNonCantor, inst(Rational(5, 2), Rational(5, 2)), cap(100)), ResourceLimit);
}

TEST(SimulatorTest, ConvergeClassIndexIncreases) {
  testing::RationalGen gen(605);
  for (int i = 0; i < 30; ++i) {
    // Past D = 5/2 the exact primorial denominators make left-end walks slow.
    const Rational d = Rational(1) + gen.between(Rational(0), Rational(3, 2), 20);
    Instance<Rational> c = inst(d, gen.between(-d, d, 20));
    c.quit_radius = Rational(1, gen.integer(2, 12));
    const auto trace = run(kConverge, c, cap(100'000));
    ASSERT_TRUE(trace.halted()) << d;
    ASSERT_LE(trace.final_position.abs(), *c.quit_radius);
    std::optional<std::size_t> last;
    bool previous_was_left = false;
    for (const auto& step : trace.steps) {
      const auto* seen = std::get_if<Seen<Rational>>(&step.observation);
      if (!seen || seen->side != Side::left) {
        previous_was_left = false;
        last.reset();
        continue;
      }
      const DeltaClass k = delta_class(seen->distance);
      if (k && previous_was_left && last) ASSERT_GT(*k, *last);
      previous_was_left = true;
      last = k;
    }
  }
}

TEST(SimulatorTest, SweepExamples) {
  SweepOptions<Rational> options;
  options.max_steps = 1000;
  const std::vector<Rational> ds = {Rational(23, 10), Rational(13, 5)};
  const std::vector<StartPoint<Rational>> xs = {{Rational(-1), Rational(0)}, absolute_start(Rational(-1)),
                                                absolute_start(Rational(1))};
  const auto rows = sweep(kOneBit, ds, xs, options);
  ASSERT_EQ(rows.size(), 12u);
  for (const auto& row : rows) EXPECT_TRUE(std::holds_alternative<std::size_t>(row.result));
  EXPECT_EQ(rows[0].half_length, Rational(23, 10));
  EXPECT_EQ(rows[0].start, Rational(-23, 10));
  EXPECT_EQ(rows[0].initial_bit, MemoryBit(0));
  EXPECT_EQ(rows[1].initial_bit, MemoryBit(1));

  const auto eps = sweep(kEpsOmit, {Rational(41, 10), Rational(18, 5)}, {{Rational(-1), Rational(0)}}, options);
  ASSERT_EQ(eps.size(), 2u);
  EXPECT_EQ(eps[0].result, (std::variant<std::size_t, Timeout, std::string>(std::size_t{7})));
  EXPECT_EQ(eps[1].result, (std::variant<std::size_t, Timeout, std::string>(std::size_t{6})));

  options.max_steps = 10'000;
  const auto nc = sweep(kNonCantor, {Rational(12, 5)}, {{Rational(-1), Rational(0)}}, options);
  ASSERT_EQ(nc.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<std::size_t>(nc[0].result));
}

TEST(SimulatorTest, SweepRecordsRowErrorsAndKeepsOrder) {
  SweepOptions<Rational> options;
  options.max_steps = 100;
  options.threads = 4;
  std::vector<Rational> ds;
  for (int i = 0; i < 40; ++i) ds.push_back(Rational(11 + i, 10));
  const auto rows = sweep(kEpsOmit, ds, {absolute_start(Rational(-2)), absolute_start(Rational(0))}, options);
  ASSERT_EQ(rows.size(), 80u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].half_length, ds[i / 2]);
    if (i / 2 < 9 && i % 2 == 0) {
      // |x0| = 2 > D for D < 2.
      EXPECT_TRUE(std::holds_alternative<std::string>(rows[i].result)) << i;
    }
  }
  options.threads = 1;
  const auto serial = sweep(kEpsOmit, ds, {absolute_start(Rational(-2)), absolute_start(Rational(0))}, options);
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].result, serial[i].result);
}

}  // namespace
}  // namespace midloc
