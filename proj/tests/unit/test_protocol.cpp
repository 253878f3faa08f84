// Copyright 2026 The qudit-transfer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <variant>

#include <gtest/gtest.h>

#include "qst/dynamics.hpp"
#include "qst/presets.hpp"
#include "qst/protocol.hpp"
#include "qst/verify.hpp"

namespace qst {
namespace {

constexpr double kPi = std::numbers::pi;
const double kG = angular_mhz(2.0);
const double kOmega = angular_mhz(20.0);

TEST(CompileSchedule, SegmentCountsForFiveLevels) {
  const Schedule s = compile_schedule(5, kG, kOmega);
  const auto n = s.counts();
  EXPECT_EQ(n.cavity, 4);
  EXPECT_EQ(n.pulse_pairs, 6);
  EXPECT_EQ(n.single_pulses, 4);
  EXPECT_EQ(n.decouples, 1);
  EXPECT_EQ(s.segments.size(), 15u);
}

TEST(CompileSchedule, TwoLevels) {
  const auto n = compile_schedule(2, kG, kOmega).counts();
  EXPECT_EQ(n.cavity, 1);
  EXPECT_EQ(n.pulse_pairs, 0);
  EXPECT_EQ(n.single_pulses, 1);
}

TEST(CompileSchedule, ThreeLevelOrder) {
  const Schedule s = compile_schedule(3, kG, kOmega);
  ASSERT_EQ(s.segments.size(), 6u);
  EXPECT_TRUE(std::holds_alternative<CavityInteraction>(s.segments[0]));
  ASSERT_TRUE(std::holds_alternative<PulsePair>(s.segments[1]));
  const auto& pair = std::get<PulsePair>(s.segments[1]);
  EXPECT_EQ(pair.level, 2);
  EXPECT_DOUBLE_EQ(pair.phase1, kPi / 2);
  EXPECT_DOUBLE_EQ(pair.phase2, -kPi / 2);
  EXPECT_TRUE(std::holds_alternative<CavityInteraction>(s.segments[2]));
  EXPECT_TRUE(std::holds_alternative<Decouple>(s.segments[3]));
  for (int k = 0; k < 2; ++k) {
    ASSERT_TRUE(std::holds_alternative<SinglePulse>(s.segments[4 + k]));
    const auto& p = std::get<SinglePulse>(s.segments[4 + k]);
    EXPECT_EQ(p.qudit, Site::Qudit2);
    EXPECT_EQ(p.level, k + 1);
    EXPECT_DOUBLE_EQ(p.phase, -kPi / 2);
  }
}

TEST(CompileSchedule, Durations) {
  const Schedule s = compile_schedule(4, kG, kOmega);
  EXPECT_DOUBLE_EQ(segment_duration(s.segments[0]), kPi / (std::sqrt(2.0) * kG));
  EXPECT_DOUBLE_EQ(segment_duration(s.segments[1]), kPi / (2.0 * kOmega));
  const auto n = s.counts();
  EXPECT_NEAR(s.total_duration(),
              n.cavity * swap_time(kG) + (n.pulse_pairs + n.single_pulses) * pulse_time(kOmega),
              1e-20);
}

TEST(CompileSchedule, RejectsBadInput) {
  EXPECT_THROW(compile_schedule(1, kG, kOmega), std::invalid_argument);
  EXPECT_THROW(compile_schedule(3, 0.0, kOmega), std::invalid_argument);
  EXPECT_THROW(compile_schedule(3, kG, -1.0), std::invalid_argument);
}

TEST(PulseRotation, Examples) {
  const auto down = pulse_rotation(2, kPi / 2, kPi / 2).matrix;
  // basis (|l-1>, |l>)
  EXPECT_NEAR(std::abs(down(0, 1) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(down(1, 1)), 0.0, 1e-15);

  const auto up = pulse_rotation(1, -kPi / 2, kPi / 2).matrix;
  EXPECT_NEAR(std::abs(up(1, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(up(0, 1) + 1.0), 0.0, 1e-15);

  EXPECT_TRUE(pulse_rotation(3, 0.7, 0.0).matrix.isApprox(Eigen::Matrix2cd::Identity()));
}

TEST(CavitySwapMap, FullSwapAndIdentity) {
  const auto swap = cavity_swap_map(swap_time(kG), kG);
  EXPECT_NEAR(std::abs(swap(2, 0) + 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(swap(0, 0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(swap(1, 0)), 0.0, 1e-12);
  EXPECT_TRUE(cavity_swap_map(0.0, kG).isApprox(Eigen::Matrix3cd::Identity()));
}

TEST(TargetState, Examples) {
  const auto space5 = HilbertSpace::composite(5, 3);
  const auto t5 = target_state(space5, uniform_coefficients(5));
  for (int l = 0; l < 5; ++l) {
    EXPECT_NEAR(std::abs(t5.amplitude(0, l, 0) - 1.0 / std::sqrt(5.0)), 0.0, 1e-15);
  }
  EXPECT_NEAR(t5.norm(), 1.0, 1e-15);

  const auto space3 = HilbertSpace::composite(3, 3);
  const std::vector<Complex> c = {1.0, 0.0, 0.0};
  EXPECT_NEAR(std::abs(target_state(space3, c).amplitude(0, 2, 0) - 1.0), 0.0, 0.0);

  const auto space4 = HilbertSpace::composite(4, 3);
  const auto t4 = target_state(space4, uniform_coefficients(4));
  for (int l = 0; l < 4; ++l) EXPECT_NEAR(std::abs(t4.amplitude(0, l, 0) - 0.5), 0.0, 1e-15);

  const std::vector<Complex> unnormalized = {1.0, 1.0, 0.0};
  EXPECT_THROW(target_state(space3, unnormalized), std::invalid_argument);
}

TEST(IdealEvolve, FiveLevelsIncludingSigns) {
  const auto space = HilbertSpace::composite(5, 3);
  const std::vector<Complex> c = {0.1, -0.3, 0.5, 0.2, -0.4};
  double norm2 = 0.0;
  for (auto z : c) norm2 += std::norm(z);
  std::vector<Complex> cn;
  for (auto z : c) cn.push_back(z / std::sqrt(norm2));
  const auto out = ideal_evolve(compile_schedule(5, kG, kOmega), kG, kOmega, input_state(space, cn));
  for (int l = 0; l < 5; ++l) {
    EXPECT_NEAR(std::abs(out.amplitude(0, 4 - l, 0) - cn[l]), 0.0, 1e-12) << "level " << l;
  }
}

TEST(IdealEvolve, ThreeLevels) {
  const auto space = HilbertSpace::composite(3, 3);
  const std::vector<Complex> c = {Complex(0.6, 0.0), Complex(0.0, 0.48), Complex(-0.64, 0.0)};
  const auto out = ideal_evolve(compile_schedule(3, kG, kOmega), kG, kOmega, input_state(space, c));
  EXPECT_NEAR(std::abs(out.amplitude(0, 2, 0) - c[0]), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(out.amplitude(0, 1, 0) - c[1]), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(out.amplitude(0, 0, 0) - c[2]), 0.0, 1e-12);
}

TEST(IdealEvolve, GroundStateEndsOnTopLevel) {
  for (int d = 2; d <= 6; ++d) {
    const auto space = HilbertSpace::composite(d, 2);
    const auto out =
        ideal_evolve(compile_schedule(d, kG, kOmega), kG, kOmega, basis_ket(space, 0, 0, 0));
    EXPECT_NEAR(std::abs(out.amplitude(0, d - 1, 0)), 1.0, 1e-12) << "d = " << d;
  }
}

TEST(IdealEvolve, LeavingTheManifoldThrows) {
  const auto space = HilbertSpace::composite(3, 3);
  EXPECT_THROW(
      ideal_evolve(compile_schedule(3, kG, kOmega), kG, kOmega, basis_ket(space, 1, 1, 0)),
      std::domain_error);
}

TEST(ScheduleJson, RoundTrip) {
  const Schedule s = compile_schedule(5, kG, kOmega);
  const Schedule back = schedule_from_json(schedule_to_json(s));
  ASSERT_EQ(back.d, 5);
  ASSERT_EQ(back.segments.size(), s.segments.size());
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    EXPECT_EQ(back.segments[i].index(), s.segments[i].index());
    EXPECT_EQ(segment_duration(back.segments[i]), segment_duration(s.segments[i]));
  }
  EXPECT_EQ(schedule_to_json(back), schedule_to_json(s));
}

TEST(ScheduleJson, RejectsMalformedDocuments) {
  EXPECT_THROW(schedule_from_json("not json"), std::invalid_argument);
  EXPECT_THROW(schedule_from_json(R"({"format":"qst-schedule","version":1,"d":3,
      "segments":[{"type":"teleport"}]})"),
               std::invalid_argument);
  EXPECT_THROW(schedule_from_json(R"({"format":"qst-schedule","version":1,"d":3,
      "segments":[{"type":"pulse_pair","level":3,"phase1_rad":0,"phase2_rad":0,"duration_s":1e-8}]})"),
               std::invalid_argument);
  EXPECT_THROW(schedule_from_json(R"({"format":"qst-schedule","version":1,"d":3,
      "segments":[{"type":"cavity_interaction","duration_s":-1}]})"),
               std::invalid_argument);
}

// Properties.

TEST(ProtocolProperty, ExactTransferForRandomInputs) {
  std::mt19937_64 rng(31);
  for (int d = 2; d <= 7; ++d) {
    const auto space = HilbertSpace::composite(d, 1);
    const Schedule s = compile_schedule(d, kG, kOmega);
    for (int k = 0; k < 50; ++k) {
      const auto c = random_coefficients(d, rng);
      const auto out = ideal_evolve(s, kG, kOmega, input_state(space, c));
      EXPECT_GE(fidelity(out, target_state(space, c)), 1.0 - 1e-12) << "d = " << d;
    }
  }
}

TEST(ProtocolProperty, RealInputsKeepTheirSigns) {
  std::mt19937_64 rng(32);
  for (int d = 2; d <= 6; ++d) {
    const auto space = HilbertSpace::composite(d, 1);
    const Schedule s = compile_schedule(d, kG, kOmega);
    for (int k = 0; k < 20; ++k) {
      const auto c = random_coefficients(d, rng, /*real_only=*/true);
      const auto out = ideal_evolve(s, kG, kOmega, input_state(space, c));
      const auto expected = target_state(space, c);
      EXPECT_LE((out.amplitudes() - expected.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(ProtocolProperty, SwapMapIsUnitaryAndPeriodic) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    const double t = 10.0 * swap_time(kG) * unit(rng);
    const auto u = cavity_swap_map(t, kG);
    EXPECT_TRUE((u.adjoint() * u).isApprox(Eigen::Matrix3cd::Identity(), 1e-12));
    EXPECT_TRUE(cavity_swap_map(t + 2.0 * swap_time(kG), kG).isApprox(u, 1e-9));
  }
}

TEST(ProtocolProperty, PulseRotationsCompose) {
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int k = 0; k < 20; ++k) {
    const double phase = angle(rng), a = angle(rng), b = angle(rng);
    const auto ab = pulse_rotation(1, phase, a).matrix * pulse_rotation(1, phase, b).matrix;
    EXPECT_TRUE(ab.isApprox(pulse_rotation(1, phase, a + b).matrix, 1e-12));
  }
}

}  // namespace
}  // namespace qst
