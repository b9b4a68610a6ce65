#include <gtest/gtest.h>

#include "sftlock/authorization.hpp"
#include "sftlock/securitization.hpp"
#include "support.hpp"

using namespace sftlock;
using namespace sftlock::test;

namespace {

struct VaultFixture : ::testing::Test {
  Registry reg{{.sma = sma(), .contract = contracts::authorization()}};
  Vault vault{{.contract = contracts::securitization()}};
  RecordingSink sink;

  void SetUp() override {
    reg.mint_nfst(sma(), pu(), "ch-36", "cell-017", sink);
    reg.mint_nfst(sma(), pu(), "ch-40", "cell-017", sink);
    vault.stake_nfst(pu(), 1, reg, sink);
    vault.stake_nfst(pu(), 2, reg, sink);
    sink.events.clear();
  }

  void set_order(std::vector<TokenId> ids) { vault.set_lock_order(pu(), ids, sink); }
};

std::vector<TokenId> ids(std::initializer_list<TokenId> v) { return v; }

}  // namespace

TEST(VaultStake, StakeEmitsSnfstMintThenOneShare) {
  Registry reg{{.sma = sma(), .contract = contracts::authorization()}};
  Vault vault{{.contract = contracts::securitization()}};
  RecordingSink sink;
  reg.mint_nfst(sma(), pu(), "ch-36", "cell-017", sink);
  sink.events.clear();

  EXPECT_EQ(error_of([&] { vault.stake_nfst(su(), 1, reg, sink); }), ErrorCode::ownership);
  EXPECT_EQ(error_of([&] { vault.stake_nfst(pu(), 9, reg, sink); }), ErrorCode::not_found);
  vault.stake_nfst(pu(), 1, reg, sink);
  ASSERT_EQ(sink.events.size(), 2u);
  EXPECT_EQ(sink.events[0].kind, EventKind::transfer_snfst);
  EXPECT_EQ(sink.events[0].arg("_from"), Address::zero().hex());
  EXPECT_EQ(sink.events[0].arg("_to"), pu().hex());
  EXPECT_EQ(sink.events[0].arg("_tokenId"), "1");
  EXPECT_EQ(sink.events[1].kind, EventKind::transfer_sfst);
  EXPECT_EQ(sink.events[1].arg("_from"), Address::zero().hex());
  EXPECT_EQ(sink.events[1].arg("_amount"), "1000000000000000000");

  EXPECT_EQ(vault.balance_of(pu(), pu()), kUnit);
  EXPECT_EQ(vault.unlocked_of(pu()), ids({1}));
  EXPECT_EQ(vault.origin_owner(1), pu());
  EXPECT_EQ(error_of([&] { vault.stake_nfst(pu(), 1, reg, sink); }),
            ErrorCode::already_staked);
}

TEST_F(VaultFixture, LockAndUnlockEmitAndGuardState) {
  vault.lock_snfst(pu(), 2, false, sink);
  ASSERT_EQ(sink.events.size(), 1u);
  EXPECT_EQ(sink.events[0].kind, EventKind::lock_snfst);
  EXPECT_EQ(sink.events[0].arg("_primaryUser"), pu().hex());
  EXPECT_EQ(sink.events[0].arg("_tokenId"), "2");
  EXPECT_EQ(error_of([&] { vault.lock_snfst(pu(), 2, false, sink); }), ErrorCode::state);

  vault.unlock_snfst(pu(), 2, false, sink);
  EXPECT_EQ(sink.events.back().kind, EventKind::unlock_snfst);
  EXPECT_EQ(sink.events.back().arg("_tokenId"), "2");
  EXPECT_EQ(error_of([&] { vault.unlock_snfst(pu(), 2, false, sink); }), ErrorCode::state);
}

TEST_F(VaultFixture, OrderedLockConsumesHeadOfLockOrder) {
  set_order({2, 1});
  vault.lock_snfst(pu(), 2, true, sink);
  EXPECT_EQ(vault.lock_order(pu()), ids({1}));
  EXPECT_EQ(vault.locked_of(pu()), ids({2}));
}

TEST_F(VaultFixture, OrderedUnlockConsumesHeadOfUnlockOrder) {
  vault.lock_snfst(pu(), 1, false, sink);
  vault.lock_snfst(pu(), 2, false, sink);
  vault.set_unlock_order(pu(), ids({2, 1}), sink);
  vault.unlock_snfst(pu(), 2, true, sink);
  EXPECT_EQ(vault.unlock_order(pu()), ids({1}));
}

TEST_F(VaultFixture, LockOrderValidation) {
  set_order({2, 1});
  EXPECT_EQ(vault.lock_order(pu()), ids({2, 1}));
  ASSERT_EQ(sink.events.size(), 1u);
  EXPECT_EQ(sink.events[0].kind, EventKind::set_lock_order);
  EXPECT_EQ(sink.events[0].arg("_tokenIds"), "2,1");

  set_order({});
  EXPECT_TRUE(vault.lock_order(pu()).empty());

  vault.lock_snfst(pu(), 2, false, sink);
  EXPECT_EQ(error_of([&] { set_order({2}); }), ErrorCode::state);
  EXPECT_EQ(error_of([&] { set_order({1, 1}); }), ErrorCode::invalid_list);
  EXPECT_EQ(error_of([&] { set_order({7}); }), ErrorCode::not_found);
  EXPECT_EQ(error_of([&] { vault.set_lock_order(su(), ids({1}), sink); }),
            ErrorCode::ownership);
}

TEST_F(VaultFixture, UnlockOrderAfterFirstRoundTripTransfer) {
  set_order({2, 1});
  vault.transfer(pu(), su(), pu(), parse_shares("0.3"), sink);
  vault.set_unlock_order(pu(), ids({2}), sink);
  EXPECT_EQ(vault.unlock_order(pu()), ids({2}));
  vault.set_unlock_order(pu(), ids({}), sink);
  EXPECT_TRUE(vault.unlock_order(pu()).empty());
  EXPECT_EQ(error_of([&] { vault.set_unlock_order(pu(), ids({1}), sink); }),
            ErrorCode::state);
}

TEST_F(VaultFixture, TransferSfstMovesExactAtto) {
  vault.transfer_sfst(pu(), su(), pu(), parse_shares("0.3"), sink);
  ASSERT_EQ(sink.events.size(), 1u);
  EXPECT_EQ(sink.events[0].arg("_amount"), "300000000000000000");
  EXPECT_EQ(sink.events[0].arg("_primaryUser"), pu().hex());
  EXPECT_EQ(vault.balance_of(pu(), su()), parse_shares("0.3"));
  EXPECT_EQ(vault.balance_of(pu(), pu()), parse_shares("1.7"));
}

TEST_F(VaultFixture, ZeroTransferStillEmits) {
  vault.transfer_sfst(pu(), su(), pu(), 0, sink);
  EXPECT_EQ(sink.events.size(), 1u);
  EXPECT_EQ(vault.balance_of(pu(), pu()), 2 * kUnit);
  EXPECT_EQ(vault.balance_of(pu(), su()), 0u);
}

TEST_F(VaultFixture, TransferGuards) {
  EXPECT_EQ(error_of([&] { vault.transfer(pu(), su(), pu(), 2 * kUnit + 1, sink); }),
            ErrorCode::balance);
  EXPECT_EQ(error_of([&] { vault.transfer(pu(), Address::zero(), pu(), 1, sink); }),
            ErrorCode::invalid_recipient);
  EXPECT_EQ(error_of([&] { vault.transfer(Address::zero(), su(), pu(), 0, sink); }),
            ErrorCode::invalid_argument);
  EXPECT_TRUE(sink.events.empty());
}

TEST_F(VaultFixture, FractionalRoundTrip) {
  set_order({2, 1});
  sink.events.clear();
  vault.transfer(pu(), su(), pu(), parse_shares("0.3"), sink);
  EXPECT_EQ(vault.balance_of(pu(), pu()), parse_shares("1.7"));
  EXPECT_EQ(vault.balance_of(pu(), su()), parse_shares("0.3"));
  ASSERT_EQ(sink.events.size(), 2u);
  EXPECT_EQ(sink.events[1].kind, EventKind::lock_snfst);
  EXPECT_EQ(sink.events[1].arg("_tokenId"), "2");

  sink.events.clear();
  vault.transfer(su(), pu(), pu(), parse_shares("0.3"), sink);
  EXPECT_EQ(vault.balance_of(pu(), pu()), 2 * kUnit);
  EXPECT_EQ(vault.balance_of(pu(), su()), 0u);
  ASSERT_EQ(sink.events.size(), 2u);
  EXPECT_EQ(sink.events[1].kind, EventKind::unlock_snfst);
  EXPECT_EQ(sink.events[1].arg("_tokenId"), "2");
  EXPECT_EQ(vault.share_of(pu(), pu()), 2u);
  EXPECT_EQ(vault.balance_of(pu(), sma()), 0u);
}

TEST_F(VaultFixture, SuToSuMovesNoSnfst) {
  vault.transfer(pu(), su(), pu(), parse_shares("0.5"), sink);
  sink.events.clear();
  vault.transfer(su(), su2(), pu(), parse_shares("0.2"), sink);
  ASSERT_EQ(sink.events.size(), 1u);
  EXPECT_EQ(sink.events[0].kind, EventKind::transfer_sfst);
  EXPECT_EQ(vault.balance_of(pu(), su()), parse_shares("0.3"));
  EXPECT_EQ(vault.balance_of(pu(), su2()), parse_shares("0.2"));
}

TEST_F(VaultFixture, WithoutOrderLocksFrontOfUnlocked) {
  sink.events.clear();
  vault.transfer(pu(), su(), pu(), parse_shares("1.3"), sink);
  std::vector<std::string> locked;
  for (const auto& e : sink.events)
    if (e.kind == EventKind::lock_snfst) locked.push_back(e.arg("_tokenId"));
  EXPECT_EQ(locked, (std::vector<std::string>{"1", "2"}));
}

TEST_F(VaultFixture, PartialOrderFallsBackToUnlockedList) {
  set_order({2});
  sink.events.clear();
  vault.transfer(pu(), su(), pu(), parse_shares("1.3"), sink);
  std::vector<std::string> locked;
  for (const auto& e : sink.events)
    if (e.kind == EventKind::lock_snfst) locked.push_back(e.arg("_tokenId"));
  EXPECT_EQ(locked, (std::vector<std::string>{"2", "1"}));
  EXPECT_TRUE(vault.unlocked_of(pu()).empty());
}

TEST_F(VaultFixture, UnorderedLockPurgesFromLockOrder) {
  set_order({1, 2});
  vault.lock_snfst(pu(), 2, false, sink);
  EXPECT_EQ(vault.lock_order(pu()), ids({1}));
  vault.set_unlock_order(pu(), ids({2}), sink);
  vault.unlock_snfst(pu(), 2, false, sink);
  EXPECT_TRUE(vault.unlock_order(pu()).empty());
}

TEST_F(VaultFixture, Queries) {
  EXPECT_EQ(vault.balance_of(pu(), su2()), 0u);
  EXPECT_EQ(vault.total_supply(pu()), 2 * kUnit);
  EXPECT_EQ(vault.origin_owner(1), pu());
  EXPECT_EQ(vault.origin_owner(42), Address::zero());
  EXPECT_EQ(vault.snfst_ids(pu()), ids({1, 2}));
  EXPECT_EQ(vault.primary_users(), std::vector<Address>{pu()});
}
