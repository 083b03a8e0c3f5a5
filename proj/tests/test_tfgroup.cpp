#include <gtest/gtest.h>

#include "helpers.hpp"
#include "protori/errors.hpp"
#include "protori/oracle.hpp"
#include "protori/tfgroup.hpp"

using namespace protori;
using namespace protori::test;

TEST(Member, Examples) {
  auto x = G(kHalfDiag);
  EXPECT_TRUE(member(x, V("1/2,1/2")));
  EXPECT_FALSE(member(x, V("1/2,0")));
  EXPECT_TRUE(member(x, V("3/2,1/2")));
  EXPECT_TRUE(member(G(kZhalf), V("5/8")));
  EXPECT_FALSE(member(G(kZhalf), V("1/3")));
  EXPECT_TRUE(member(G(kQ), V("7/33")));
}

TEST(Height, Examples) {
  EXPECT_EQ(p_height(G(kZhalf), 2, V("1")), kInf);
  EXPECT_EQ(p_height(G(kZhalf), 3, V("1")), 0);
  EXPECT_EQ(p_height(G(kHalfDiag), 2, V("1,1")), 1);
  EXPECT_EQ(p_height(G(kQuarter), 2, V("1")), 2);
  EXPECT_EQ(p_height(G(kQuarter), 2, V("3/4")), 0);
  EXPECT_THROW(p_height(G(kZ), 2, V("0")), InputError);
}

TEST(Height, Sequences) {
  EXPECT_TRUE(height_seq(G(kZ), V("1")).is_one());
  EXPECT_EQ(height_seq(G(kZsixth), V("1")), S("2^inf*3^inf"));
  EXPECT_EQ(height_seq(G(kQuarter), V("1")), S("2^2"));
  EXPECT_EQ(height_seq(G(kQ), V("1")), Supernatural::zhat());
  EXPECT_EQ(height_seq(G(kZ), V("12")), S("2^2*3"));
}

TEST(Height, AgreesWithOracle) {
  auto x = G("rank 2; dir v=(1/2,1/4) s=2^2*3; dir v=(1,3) s=5^inf");
  for (const char* z : {"1,0", "0,1", "1,3", "2,1", "1/2,1/4", "3,9"})
    for (Prime p : {2, 3, 5, 7}) {
      Exponent h = p_height(x, p, V(z));
      auto o = oracle::height(x, p, V(z), 8);
      if (h >= 8)
        EXPECT_TRUE(o.saturated) << z << " at " << p;
      else
        EXPECT_EQ(o.value, h) << z << " at " << p;
    }
}

TEST(Rank1, Types) {
  EXPECT_TRUE(rank1_isomorphic(G(kZhalf), G("rank 1; dir v=(1/1024); dir v=(1) s=2^inf")));
  EXPECT_FALSE(rank1_isomorphic(G(kZhalf), G(kZthird)));
  EXPECT_TRUE(rank1_isomorphic(G(kZsixth), G(kZsixth)));
  EXPECT_TRUE(rank1_isomorphic(G(kZ), G(kQuarter)));
  EXPECT_THROW(rank1_type(G("rank 2")), InputError);
}

TEST(TauSup, Examples) {
  EXPECT_TRUE(tau_sup(G("rank 2")).canonical().is_one());
  EXPECT_EQ(tau_sup(G("rank 2; dir v=(1,0) s=2^inf; dir v=(0,1) s=3^inf")), TypeClass(S("2^inf*3^inf")));
  EXPECT_TRUE(tau_sup(G(kQuarter)).canonical().is_one());
  EXPECT_EQ(sup_heights(G(kQuarter)), S("2^2"));
}

TEST(Quotient, Examples) {
  EXPECT_EQ(quotient_structure(G(kZhalf), Lattice::standard(1)), R("2^inf"));
  EXPECT_EQ(quotient_structure(G(kHalfDiag), Lattice::standard(2)), R("2"));
  EXPECT_TRUE(quotient_structure(G("rank 3"), Lattice::standard(3)).rows.empty());
  EXPECT_EQ(quotient_structure(G("rank 2; dir v=(1/2,0); dir v=(0,1/3)"), Lattice::standard(2)), R("2*3"));
  EXPECT_EQ(quotient_structure(G(kQ), Lattice::standard(1)), R("1 default inf"));
  // F need not be Z^n
  EXPECT_EQ(quotient_structure(G(kHalfDiag), L("1/2,1/2;0,1")).rows.size(), 0u);
  EXPECT_THROW(quotient_structure(G(kZ), L("1/2")), ContainmentError);
}

TEST(HomCheck, Examples) {
  EXPECT_TRUE(hom_check(M("1"), G(kZ), G(kZhalf)));
  EXPECT_FALSE(hom_check(M("2"), G(kZthird), G(kZ)));
  auto x = G("rank 2; dir v=(1/2,1/3) s=2^inf; dir v=(0,1/5)");
  EXPECT_TRUE(hom_check(M("1,0;0,1"), x, x));
  EXPECT_TRUE(hom_check(M("3"), G(kZthird), G(kZthird)));
  EXPECT_FALSE(hom_check(M("1"), G(kQ), G(kZsixth)));
  EXPECT_TRUE(hom_check(M("1"), G(kZsixth), G(kQ)));
  EXPECT_THROW(hom_check(M("1,0"), G(kZ), G(kZ)), InputError);
}

TEST(HomCheck, CounterexamplesAreReal) {
  auto x = G("rank 2; dir v=(1,1) s=3^inf; dir v=(1/4,0)");
  auto y = G("rank 2; dir v=(1,0) s=3^2");
  auto bad = hom_counterexample(M("1,0;0,1"), x, y);
  ASSERT_TRUE(bad.has_value());
  EXPECT_TRUE(oracle::member(x, *bad));
  EXPECT_FALSE(oracle::member(y, *bad));
}

TEST(Scaling, Witnesses) {
  EXPECT_EQ(scaling_into(G(kQuarter), G(kZ)), Integer(4));
  EXPECT_EQ(scaling_into(G(kZ), G(kQuarter)), Integer(1));
  EXPECT_FALSE(scaling_into(G(kZhalf), G(kZ)).has_value());
  EXPECT_EQ(scaling_into(G("rank 1; dir v=(1/1024); dir v=(1) s=2^inf"), G(kZhalf)), Integer(1));
}

TEST(Split, Examples) {
  auto q = canonical_split(G(kQ));
  EXPECT_EQ(q.r, 0);
  EXPECT_EQ(q.k, 1);
  EXPECT_EQ(q.reduced.rank(), 0);
  auto t = canonical_split(G("rank 2"));
  EXPECT_EQ(t.r, 2);
  EXPECT_EQ(t.k, 0);
  auto m = canonical_split(G("rank 2; dir v=(0,1) s=2^inf"));
  EXPECT_EQ(m.r, 1);
  EXPECT_EQ(m.k, 0);
  ASSERT_EQ(m.reduced.rank(), 1);
  EXPECT_TRUE(rank1_isomorphic(m.reduced, G(kZhalf)));
  auto z = canonical_split(G(kZhalf));
  EXPECT_EQ(z.r + z.k, 0);
  EXPECT_EQ(z.reduced.rank(), 1);
}

TEST(Split, RankBookkeeping) {
  for (const char* t : {"rank 3; dir v=(1,1,0) s=1 default inf; dir v=(0,0,1/2)",
                        "rank 3; dir v=(1,2,3) s=5^inf", "rank 2; dir v=(1/2,1/2)"}) {
    auto x = G(t);
    auto s = canonical_split(x);
    EXPECT_EQ(s.r + s.k + s.reduced.rank(), x.rank()) << t;
  }
}
