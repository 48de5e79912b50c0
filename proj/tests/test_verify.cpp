#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mfkron/characters.hpp"
#include "mfkron/error.hpp"
#include "mfkron/verify.hpp"

using namespace mfkron;
namespace fs = std::filesystem;

namespace {

  fs::path scratch_file(std::string const& name) {
    fs::path const dir = fs::temp_directory_path() / "mfkron-tests";
    fs::create_directories(dir);
    fs::path const p = dir / name;
    fs::remove(p);
    return p;
  }

  std::vector<std::string> lines_of(fs::path const& p) {
    std::ifstream            in(p);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
      out.push_back(line);
    }
    return out;
  }

}  // namespace

TEST(VerifyMode, ParsesNames) {
  EXPECT_EQ(parse_verify_mode("pairs"), VerifyMode::pairs);
  EXPECT_EQ(parse_verify_mode("triples"), VerifyMode::triples);
  EXPECT_EQ(parse_verify_mode("skew"), VerifyMode::skew);
  EXPECT_EQ(parse_verify_mode("engines"), VerifyMode::engines);
  EXPECT_EQ(to_string(VerifyMode::skew), "skew");
  EXPECT_THROW(parse_verify_mode("all"), DomainError);
}

TEST(VerifyCeiling, DefaultsAndEnvironmentOverride) {
  EXPECT_EQ(verify_ceiling(VerifyMode::pairs), 9);
  EXPECT_EQ(verify_ceiling(VerifyMode::triples), 7);
  EXPECT_EQ(verify_ceiling(VerifyMode::skew), 7);
  EXPECT_EQ(verify_ceiling(VerifyMode::engines), 7);
  setenv("MFKRON_MAX_TRIPLES", "4", 1);
  EXPECT_EQ(verify_ceiling(VerifyMode::triples), 4);
  unsetenv("MFKRON_MAX_TRIPLES");
}

TEST(ProductCache, RecordRoundTrip) {
  Partition const lam{3, 3, 3};
  auto const product = kron_product_oracle(lam, lam);
  std::string const line = ProductCache::encode(lam, lam, product);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_NE(line.find("\"lambda\":\"3^3\""), std::string::npos);
  auto const [a, b, e] = ProductCache::decode(line);
  EXPECT_EQ(a, lam);
  EXPECT_EQ(b, lam);
  EXPECT_EQ(e, product);
}

TEST(ProductCache, StoresUnorderedPairsWithTheLargerOperandFirst) {
  Partition const small{2, 2, 1};
  Partition const large{4, 1};
  std::string const line = ProductCache::encode(small, large, kron_product_oracle(small, large));
  auto const [a, b, e] = ProductCache::decode(line);
  EXPECT_EQ(a, large);
  EXPECT_EQ(b, small);

  ProductCache cache;
  cache.store(small, large, e);
  EXPECT_EQ(cache.size(), 1u);
  EXPECT_EQ(cache.find(large, small), e);
  EXPECT_FALSE(cache.find(large, large).has_value());
}

TEST(ProductCache, RejectsMalformedRecords) {
  EXPECT_THROW(ProductCache::decode("not json"), ParseError);
  EXPECT_THROW(ProductCache::decode(R"({"n":3,"lambda":"2,1"})"), ParseError);
  EXPECT_THROW(ProductCache::decode(R"({"n":4,"lambda":"2,1","mu":"3","terms":[]})"), ParseError);
  EXPECT_THROW(ProductCache::decode(R"({"n":3,"lambda":"2,x","mu":"3","terms":[]})"), ParseError);

  fs::path const p = scratch_file("bad-header.jsonl");
  std::ofstream(p) << "{\"format\":\"other\"}\n";
  ProductCache cache;
  EXPECT_THROW(cache.load(p), ParseError);
}

TEST(ProductCache, SaveAppendsAndLastRecordWins) {
  fs::path const p = scratch_file("append.jsonl");
  Partition const lam{2, 1};
  CharacterExpansion fake(3);
  fake.add({3}, 7);
  {
    ProductCache cache;
    cache.load(p);
    cache.store(lam, lam, fake);
    cache.save(p);
  }
  auto const first = lines_of(p);
  ASSERT_EQ(first.size(), 2u);
  EXPECT_EQ(first[0], R"({"format":"mfkron-cache","version":1})");
  {
    ProductCache cache;
    cache.load(p);
    EXPECT_EQ(cache.find(lam, lam), fake);
    cache.store(lam, lam, kron_product_oracle(lam, lam));
    cache.save(p);
    cache.save(p);
  }
  EXPECT_EQ(lines_of(p).size(), 3u);
  ProductCache reread;
  reread.load(p);
  EXPECT_EQ(reread.size(), 1u);
  EXPECT_EQ(reread.find(lam, lam), kron_product_oracle(lam, lam));
}

TEST(RunVerification, SmallSweepsSucceed) {
  for (VerifyMode mode : {VerifyMode::pairs, VerifyMode::triples, VerifyMode::skew,
                          VerifyMode::engines}) {
    VerifyOptions options;
    options.mode = mode;
    auto const report = run_verification(5, options);
    EXPECT_TRUE(report.success()) << report.to_text();
    EXPECT_GT(report.pairs_checked, 0u);
    EXPECT_EQ(report.degree, 5);
  }
}

TEST(RunVerification, PairCountIsUnorderedPairs) {
  VerifyOptions options;
  auto const report = run_verification(6, options);
  EXPECT_EQ(report.pairs_checked, 11u * 12u / 2u);
  std::string const text = report.to_text();
  EXPECT_NE(text.find("mismatches: 0\n"), std::string::npos);
  EXPECT_NE(text.find("result: ok\n"), std::string::npos);
  EXPECT_NE(report.to_json().find("\"success\":true"), std::string::npos);
}

TEST(RunVerification, CeilingAndDomain) {
  VerifyOptions options;
  EXPECT_THROW(run_verification(10, options), ResourceError);
  options.mode = VerifyMode::engines;
  EXPECT_THROW(run_verification(8, options), ResourceError);
  EXPECT_THROW(run_verification(0, options), DomainError);
}

TEST(RunVerification, WarmCacheGivesTheSameReport) {
  fs::path const p = scratch_file("warm.jsonl");
  VerifyOptions options;
  options.mode = VerifyMode::pairs;

  ProductCache cold;
  cold.load(p);
  options.cache = &cold;
  auto const first = run_verification(7, options);
  cold.save(p);
  EXPECT_EQ(cold.size(), 15u * 16u / 2u);

  ProductCache warm;
  warm.load(p);
  EXPECT_EQ(warm.size(), cold.size());
  options.cache = &warm;
  auto const second = run_verification(7, options);
  EXPECT_EQ(first.to_text(), second.to_text());
  EXPECT_EQ(first.to_json(), second.to_json());
}

TEST(RunVerification, ReportIsIndependentOfTheWorkerCount) {
  for (VerifyMode mode : {VerifyMode::pairs, VerifyMode::skew, VerifyMode::triples}) {
    VerifyOptions options;
    options.mode = mode;
    options.jobs = 1;
    auto const serial = run_verification(6, options);
    options.jobs = 4;
    auto const parallel = run_verification(6, options);
    EXPECT_EQ(serial.to_text(), parallel.to_text());
  }
}

TEST(RunVerification, CorruptedCacheSurfacesAsMismatch) {
  ProductCache cache;
  Partition const lam{3, 1};
  CharacterExpansion wrong(4);
  wrong.add({4});
  wrong.add({2, 2}, 2);
  cache.store(lam, lam, wrong);
  VerifyOptions options;
  options.cache = &cache;
  auto const report = run_verification(4, options);
  ASSERT_EQ(report.mismatches.size(), 1u);
  EXPECT_EQ(report.mismatches[0].operands, (std::vector<std::string>{"3,1", "3,1"}));
  EXPECT_FALSE(report.success());
  EXPECT_NE(report.to_text().find("result: FAIL"), std::string::npos);
}
