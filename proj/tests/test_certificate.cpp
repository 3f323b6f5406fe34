// Copyright 2026 The copsearch Authors
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

#include "copsearch/certificate.hpp"

#include <random>

#include "copsearch/enumerate.hpp"
#include "copsearch/solver.hpp"
#include "gtest/gtest.h"

namespace copsearch {
namespace {

Digraph C3() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

TEST(CertificateJsonTest, SingleVertexSequenceBytes) {
  const Outcome o = solve_invisible(Digraph(1, {}), 1, Agility::kLazy, false);
  ASSERT_TRUE(o.certificate.has_value());
  const std::string text = to_json(*o.certificate);
  EXPECT_NE(text.find("\"variant\": \"inert\""), std::string::npos);
  EXPECT_NE(text.find("\"kind\": \"sequence\""), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(certificate_from_json(text), *o.certificate);
}

TEST(CertificateJsonTest, RoundTripsEverySolverCertificate) {
  std::mt19937_64 rng(3);
  const GameVariant variants[] = {GameVariant::visible(), GameVariant::inert(),
                                  GameVariant::invisible_fast(),
                                  GameVariant::visible_scc()};
  for (int i = 0; i < 40; ++i) {
    const Digraph d = random_digraph(2 + static_cast<int>(rng() % 4), 0.4, rng());
    for (const GameVariant& v : variants) {
      for (bool monotone : {false, true}) {
        const Certificate cert = cop_number(d, v, monotone).certificate;
        const Certificate back = certificate_from_json(to_json(cert));
        EXPECT_EQ(back, cert);
        EXPECT_EQ(to_json(back), to_json(cert));
      }
    }
  }
}

TEST(CertificateJsonTest, RejectsMalformedInput) {
  const std::string good =
      to_json(*solve_invisible(Digraph(1, {}), 1, Agility::kLazy, false)
                   .certificate);
  EXPECT_THROW(certificate_from_json(""), CertificateError);
  EXPECT_THROW(certificate_from_json("{"), CertificateError);
  EXPECT_THROW(certificate_from_json("[]"), CertificateError);
  auto replaced = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    const auto at = s.find(from);
    EXPECT_NE(at, std::string::npos) << from;
    s.replace(at, from.size(), to);
    return s;
  };
  EXPECT_THROW(certificate_from_json(replaced("\"inert\"", "\"lazy\"")),
               CertificateError);
  EXPECT_THROW(certificate_from_json(replaced("\"sequence\"", "\"tree\"")),
               CertificateError);
  EXPECT_THROW(certificate_from_json(replaced("\"k\": 1", "\"k\": -1")),
               CertificateError);
  EXPECT_THROW(certificate_from_json(replaced("[\n    [\n      0", "[\n    [\n      64")),
               CertificateError);
}

TEST(VerifyCertificateTest, DroppedLastMoveIsRejected) {
  const Digraph single(1, {});
  Certificate cert = *solve_invisible(single, 1, Agility::kLazy, false).certificate;
  EXPECT_TRUE(verify_certificate(single, cert).valid);
  cert.sequence.pop_back();
  const VerifyResult r = verify_certificate(single, cert);
  EXPECT_FALSE(r.valid);
  EXPECT_FALSE(r.diagnostic.empty());
}

TEST(VerifyCertificateTest, VisibleReplayAndTampering) {
  const Digraph c3 = C3();
  const Certificate cert =
      *solve_visible(c3, 2, Confinement::kReachability, false).certificate;
  EXPECT_TRUE(verify_certificate(c3, cert).valid);

  Certificate lower = cert;
  lower.k = 1;
  EXPECT_FALSE(verify_certificate(c3, lower).valid);

  Certificate missing = cert;
  missing.positional.pop_back();
  EXPECT_FALSE(verify_certificate(c3, missing).valid);

  Certificate idle = cert;
  for (StrategyMove& m : idle.positional) m.next = m.position.cops;
  EXPECT_FALSE(verify_certificate(c3, idle).valid);
}

TEST(VerifyCertificateTest, WrongGraphIsAnError) {
  const Certificate cert =
      *solve_visible(C3(), 2, Confinement::kReachability, false).certificate;
  EXPECT_THROW(verify_certificate(Digraph(3, {{0, 1}}), cert), CertificateError);
}

TEST(VerifyCertificateTest, NonMonotoneSequenceFailsMonotoneCheck) {
  // Clearing 0 then leaving it open to recontamination from 1.
  const Digraph two = bidirect(2, {{0, 1}});
  Certificate cert;
  cert.variant = GameVariant::inert();
  cert.k = 1;
  cert.monotone = true;
  cert.graph_sha256 = fingerprint(two);
  cert.kind = CertificateKind::kSequence;
  cert.sequence = {VertexSet{0}, VertexSet{}, VertexSet{1}};
  EXPECT_FALSE(verify_certificate(two, cert).valid);
  cert.monotone = false;
  EXPECT_FALSE(verify_certificate(two, cert).valid);
}

}  // namespace
}  // namespace copsearch
