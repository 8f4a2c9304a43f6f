#include "doctest.h"

#include <sstream>

#include "support/fixtures.hpp"
#include "timeprobe/error.hpp"
#include "timeprobe/event_log.hpp"
#include "timeprobe/rng.hpp"
#include "timeprobe/snapshot.hpp"

using namespace timeprobe;
using fixtures::rec;

namespace {

EventLog parse(const std::string& text, IngestConfig config = {}) {
  std::istringstream in(text);
  return parse_events(in, config);
}

EventLog random_log(Rng& rng, std::size_t events, std::size_t users, std::size_t items, Timestamp span) {
  std::vector<RawRecord> records;
  for (std::size_t e = 0; e < events; ++e)
    records.push_back(rec(std::to_string(rng.uniform_index(users)), std::to_string(rng.uniform_index(items)),
                          static_cast<Timestamp>(rng.uniform_index(static_cast<std::uint64_t>(span)))));
  return EventLog::from_records(std::move(records));
}

}  // namespace

TEST_CASE("rating threshold drops low ratings") {
  IngestConfig config;
  config.rating_column = 3;
  config.rating_threshold = 3.0;
  const auto log = parse("u1\ta\t1\t5\nu1\tb\t2\t2\nu2\ta\t3\t3\n", config);
  CHECK(log.event_count() == 2);
  CHECK(log.item_count() == 1);
  CHECK(log.user_count() == 2);
}

TEST_CASE("duplicate pairs keep the earliest timestamp") {
  const auto log = EventLog::from_records({rec("u1", "a", 9), rec("u1", "a", 5)});
  REQUIRE(log.event_count() == 1);
  CHECK(log.events()[0].time == 5);
}

TEST_CASE("events are sorted by time with input order among ties") {
  const auto log = EventLog::from_records({rec("u1", "a", 9), rec("u2", "b", 2), rec("u3", "c", 5)});
  std::vector<Timestamp> times;
  for (const auto& e : log.events()) times.push_back(e.time);
  CHECK(times == std::vector<Timestamp>{2, 5, 9});

  const auto tied = EventLog::from_records({rec("x", "b", 1), rec("y", "a", 1)});
  CHECK(tied.user_id(tied.events()[0].user) == "x");
  CHECK(tied.user_id(tied.events()[1].user) == "y");
}

TEST_CASE("identifiers are indexed in natural order") {
  const auto log = EventLog::from_records({rec("10", "b", 0), rec("9", "a", 0), rec("z", "10", 0), rec("007", "2", 0)});
  CHECK(log.user_id(0) == "007");
  CHECK(log.user_id(1) == "9");
  CHECK(log.user_id(2) == "10");
  CHECK(log.user_id(3) == "z");
  CHECK(log.item_id(0) == "2");
  CHECK(log.item_id(1) == "10");
  CHECK(log.item_id(2) == "a");
  CHECK(identifier_less("2", "10"));
  CHECK_FALSE(identifier_less("10", "2"));
  CHECK(identifier_less("99", "a"));
}

TEST_CASE("parse errors carry the line number") {
  SUBCASE("missing field") {
    try {
      parse("u1\ta\t1\nu2\tb\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("bad timestamp") {
    try {
      parse("# comment\nu1\ta\tyesterday\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("negative timestamp") { CHECK_THROWS_AS(parse("u1\ta\t-4\n"), ParseError); }
  SUBCASE("bad rating") {
    IngestConfig config;
    config.rating_column = 3;
    CHECK_THROWS_AS(parse("u1\ta\t1\tgood\n", config), ParseError);
  }
}

TEST_CASE("empty results are reported explicitly") {
  CHECK_THROWS_AS(parse(""), EmptyLogError);
  IngestConfig config;
  config.rating_column = 3;
  config.rating_threshold = 3.0;
  CHECK_THROWS_AS(parse("u1\ta\t1\t1\n", config), EmptyLogError);
}

TEST_CASE("header, comma delimiter, custom columns and rebasing") {
  IngestConfig config;
  config.delimiter = ',';
  config.has_header = true;
  config.user_column = 1;
  config.item_column = 0;
  config.time_column = 2;
  config.rebase_time = true;
  const auto log = parse("item,user,time\r\na, u1 ,100\nb,u2,107\n", config);
  CHECK(log.event_count() == 2);
  CHECK(log.user_id(0) == "u1");
  CHECK(log.min_time() == 0);
  CHECK(log.max_time() == 7);
}

TEST_CASE("written events read back identically") {
  Rng rng(3);
  const auto log = random_log(rng, 200, 20, 30, 100);
  std::ostringstream out;
  write_events(out, log);
  const auto again = parse(out.str());
  REQUIRE(again.event_count() == log.event_count());
  for (std::size_t e = 0; e < log.event_count(); ++e) {
    CHECK(again.user_id(again.events()[e].user) == log.user_id(log.events()[e].user));
    CHECK(again.item_id(again.events()[e].item) == log.item_id(log.events()[e].item));
    CHECK(again.events()[e].time == log.events()[e].time);
  }
}

TEST_CASE("build_snapshot uses a strict cut") {
  const auto log = EventLog::from_records({rec("u1", "a", 1), rec("u2", "a", 3), rec("u3", "b", 5)});
  const auto at3 = build_snapshot(log, 3);
  CHECK(at3.edge_count() == 1);
  CHECK(at3.cut_time() == 3);
  CHECK(at3.item_degree(fixtures::item(log, "a")) == 1);

  const auto empty = build_snapshot(log, 0);
  CHECK(empty.edge_count() == 0);
  CHECK(empty.active_item_count() == 0);
  for (ItemIndex i = 0; i < log.item_count(); ++i) CHECK(empty.item_degree(i) == 0);

  const auto full = build_snapshot(log, log.max_time() + 1);
  CHECK(full.edge_count() == log.event_count());
  std::size_t sum = 0;
  for (ItemIndex i = 0; i < log.item_count(); ++i) sum += full.item_degree(i);
  CHECK(sum == log.event_count());

  CHECK(build_snapshot(log, -5).edge_count() == 0);
  CHECK(build_snapshot(log, 1000).edge_count() == 3);
}

TEST_CASE("degree_increase counts the half-open window") {
  const auto log = EventLog::from_records({rec("u1", "a", 2), rec("u2", "a", 8), rec("u3", "a", 9)});
  CHECK(log.degree_increase("a", 10, 3) == 2);
  CHECK(log.degree_increase("nope", 10, 3) == 0);
  CHECK(log.degree_increase("a", 10, 100) == log.item_degree_at(fixtures::item(log, "a"), 10));
  CHECK(log.degree_increase("a", 9, 1) == 1);
}

TEST_CASE("snapshot invariants on random logs") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto log = random_log(rng, 150, 15, 25, 60);
    Snapshot previous = build_snapshot(log, 0);
    for (Timestamp t = 0; t <= log.max_time() + 1; t += 7) {
      const auto snap = build_snapshot(log, t);
      std::size_t user_sum = 0;
      std::size_t item_sum = 0;
      for (UserIndex u = 0; u < snap.user_space(); ++u) user_sum += snap.user_degree(u);
      for (ItemIndex i = 0; i < snap.item_space(); ++i) item_sum += snap.item_degree(i);
      CHECK(user_sum == item_sum);
      CHECK(user_sum == snap.edge_count());
      CHECK(snap.edge_count() == log.prefix_length(t));

      // Both orientations agree and growth is monotone.
      for (UserIndex u = 0; u < snap.user_space(); ++u)
        for (const auto i : snap.items_of(u)) {
          const auto users = snap.users_of(i);
          CHECK(std::binary_search(users.begin(), users.end(), u));
        }
      for (UserIndex u = 0; u < previous.user_space(); ++u)
        for (const auto i : previous.items_of(u)) CHECK(snap.has_edge(u, i));
      previous = snap;
    }

    // Windowed degree queries agree with two snapshots.
    for (int q = 0; q < 20; ++q) {
      const auto item = static_cast<ItemIndex>(rng.uniform_index(log.item_count()));
      const auto t = static_cast<Timestamp>(rng.uniform_index(70));
      const auto tau = static_cast<Timestamp>(1 + rng.uniform_index(30));
      const auto expected = build_snapshot(log, t).item_degree(item) -
                            build_snapshot(log, std::max<Timestamp>(0, t - tau)).item_degree(item);
      CHECK(log.degree_increase(item, t, tau) == expected);
      CHECK(build_snapshot(log, log.max_time() + 1).degree_increase(item, t, tau) == expected);
    }
  }
}
