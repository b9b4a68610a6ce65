#include <gtest/gtest.h>

#include "sftlock/authorization.hpp"
#include "sftlock/securitization.hpp"
#include "support.hpp"

using namespace sftlock;
using namespace sftlock::test;

namespace {

struct RegistryFixture : ::testing::Test {
  Registry reg{{.sma = sma(), .contract = contracts::authorization()}};
  RecordingSink sink;
};

}  // namespace

TEST_F(RegistryFixture, FirstMintMatchesMintEventShape) {
  EXPECT_EQ(reg.mint_nfst(sma(), pu(), "ch-36", "cell-017", sink), 1u);
  ASSERT_EQ(sink.events.size(), 1u);
  const auto& ev = sink.events[0];
  EXPECT_EQ(ev.kind, EventKind::mint_nfst);
  EXPECT_EQ(ev.emitter, contracts::authorization());
  EXPECT_EQ(ev.arg("_from"), Address::zero().hex());
  EXPECT_EQ(ev.arg("_to"), pu().hex());
  EXPECT_EQ(ev.arg("_tokenId"), "1");
  EXPECT_TRUE(reg.is_pu(pu()));
}

TEST_F(RegistryFixture, CounterIncrementsAndKeysAreUnique) {
  EXPECT_EQ(reg.mint_nfst(sma(), pu(), "ch-36", "cell-017", sink), 1u);
  EXPECT_EQ(reg.mint_nfst(sma(), pu(), "ch-40", "cell-017", sink), 2u);
  EXPECT_EQ(error_of([&] { reg.mint_nfst(sma(), su(), "ch-36", "cell-017", sink); }),
            ErrorCode::duplicate_spectrum);
  EXPECT_EQ(reg.token_id_counter(), 2u);
  EXPECT_EQ(reg.minted_list(), (std::vector<TokenId>{1, 2}));
  EXPECT_EQ(sink.events.size(), 2u);
}

TEST_F(RegistryFixture, OnlySmaMintsToNonZero) {
  EXPECT_EQ(error_of([&] { reg.mint_nfst(pu(), pu(), "a", "b", sink); }),
            ErrorCode::authorization);
  EXPECT_EQ(error_of([&] { reg.mint_nfst(sma(), Address::zero(), "a", "b", sink); }),
            ErrorCode::invalid_recipient);
  EXPECT_TRUE(sink.events.empty());
  EXPECT_EQ(reg.token_id_counter(), 0u);
}

TEST_F(RegistryFixture, ReclaimOfTokenThree) {
  for (int i = 0; i < 3; ++i)
    reg.mint_nfst(sma(), pu(), "ch-" + std::to_string(i), "cell", sink);
  sink.events.clear();
  reg.reclaim_nfst(sma(), 3, sink);
  ASSERT_EQ(sink.events.size(), 1u);
  EXPECT_EQ(sink.events[0].kind, EventKind::reclaim_nfst);
  EXPECT_EQ(sink.events[0].arg("_from"), sma().hex());
  EXPECT_EQ(sink.events[0].arg("_tokenId"), "3");
  EXPECT_EQ(reg.owned_list(pu()), (std::vector<TokenId>{1, 2}));
  EXPECT_EQ(reg.find(3)->holder, sma());

  EXPECT_EQ(error_of([&] { reg.reclaim_nfst(sma(), 3, sink); }), ErrorCode::not_found);
  EXPECT_EQ(error_of([&] { reg.reclaim_nfst(sma(), 99, sink); }), ErrorCode::not_found);
  EXPECT_EQ(error_of([&] { reg.reclaim_nfst(pu(), 1, sink); }), ErrorCode::authorization);
}

TEST_F(RegistryFixture, ReclaimFreesKeyButNotId) {
  reg.mint_nfst(sma(), pu(), "ch-36", "cell-017", sink);
  reg.reclaim_nfst(sma(), 1, sink);
  EXPECT_FALSE(reg.is_pu(pu()));
  EXPECT_FALSE(reg.is_uploaded("ch-36", "cell-017"));
  EXPECT_EQ(reg.mint_nfst(sma(), pu(), "ch-36", "cell-017", sink), 2u);
}

TEST_F(RegistryFixture, ReclaimOfStakedAssetFails) {
  Vault vault{{.contract = contracts::securitization()}};
  reg.mint_nfst(sma(), pu(), "ch-36", "cell-017", sink);
  vault.stake_nfst(pu(), 1, reg, sink);
  EXPECT_EQ(error_of([&] { reg.reclaim_nfst(sma(), 1, sink); }), ErrorCode::staked_asset);
}

TEST_F(RegistryFixture, InfoAfterMintAndStake) {
  Vault vault{{.contract = contracts::securitization()}};
  reg.mint_nfst(sma(), pu(), "ch-36", "cell-017", sink);
  auto info = reg.get_nfst_info(1);
  EXPECT_EQ(info.owner, pu());
  EXPECT_EQ(info.channel, "ch-36");
  EXPECT_EQ(info.location, "cell-017");
  EXPECT_EQ(error_of([&] { reg.get_nfst_info(2); }), ErrorCode::not_found);

  vault.stake_nfst(pu(), 1, reg, sink);
  EXPECT_EQ(reg.get_nfst_info(1).owner, pu());
  EXPECT_TRUE(reg.find(1)->staked);
  EXPECT_EQ(reg.find(1)->holder, contracts::securitization());
}
