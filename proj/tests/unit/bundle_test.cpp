#include <gtest/gtest.h>

#include "revdetect/bundle.hpp"
#include "revdetect/pipeline.hpp"
#include "support/small_config.hpp"
#include "support/synthetic.hpp"

namespace revdetect {

void PrintTo(ModelKind k, std::ostream* os) { *os << model_kind_name(k); }

namespace {

class BundleTest : public ::testing::TestWithParam<ModelKind> {};

TEST_P(BundleTest, RoundTripGivesIdenticalPredictions) {
  const auto corpus = testing::synthetic_corpus({.per_class = 30});
  const auto out = train_pipeline(corpus, testing::small_config(GetParam()));
  const auto bytes = serialize_bundle(out.bundle);
  const auto back = deserialize_bundle(bytes);
  EXPECT_EQ(serialize_bundle(back), bytes);
  EXPECT_EQ(back.model_kind, model_kind_name(GetParam()));
  const auto heldout = testing::synthetic_corpus({.per_class = 10, .seed = 99});
  EXPECT_EQ(predict_corpus(back, heldout), predict_corpus(out.bundle, heldout));
}

INSTANTIATE_TEST_SUITE_P(AllModels, BundleTest,
                         ::testing::Values(ModelKind::svm, ModelKind::svm_grid, ModelKind::rf,
                                           ModelKind::gb, ModelKind::ensemble),
                         [](const auto& info) {
                           std::string n(model_kind_name(info.param));
                           std::replace(n.begin(), n.end(), '-', '_');
                           return n;
                         });

std::string small_bundle() {
  static const std::string bytes = [] {
    const auto corpus = testing::synthetic_corpus({.per_class = 10});
    return serialize_bundle(train_pipeline(corpus, testing::small_config(ModelKind::gb)).bundle);
  }();
  return bytes;
}

std::string with_checksum(std::string bytes) {
  bytes.resize(bytes.size() - 8);
  detail::ByteWriter w;
  w.raw(bytes);
  w.u64(detail::fnv1a(bytes));
  return w.bytes();
}

TEST(Bundle, EveryFlippedByteIsRejected) {
  const auto good = small_bundle();
  for (std::size_t i = 0; i < good.size(); i += 1 + good.size() / 400) {
    auto bad = good;
    bad[i] = static_cast<char>(bad[i] ^ 0x5A);
    EXPECT_THROW(deserialize_bundle(bad), FormatError) << "byte " << i;
  }
}

TEST(Bundle, EveryTruncationIsRejected) {
  const auto good = small_bundle();
  for (std::size_t n = 0; n < good.size(); n += 1 + good.size() / 400)
    EXPECT_THROW(deserialize_bundle(std::string_view(good).substr(0, n)), FormatError);
}

TEST(Bundle, OtherMajorVersionIsRejectedBeforeChecksum) {
  auto bytes = small_bundle();
  bytes[8] = 2;  // major version, little endian
  try {
    deserialize_bundle(bytes);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("version 2.0.0"), std::string::npos) << e.what();
  }
}

TEST(Bundle, NewerMinorVersionIsRead) {
  auto bytes = small_bundle();
  bytes[10] = 3;
  const auto b = deserialize_bundle(with_checksum(bytes));
  EXPECT_EQ(b.version.minor, 3);
}

TEST(Bundle, StructurallyBrokenPayloadWithValidChecksumIsRejected) {
  auto bytes = small_bundle();
  // inflate the FEAT section length so it runs past the end of the data
  const auto pos = bytes.find("FEAT");
  ASSERT_NE(pos, std::string::npos);
  bytes[pos + 4 + 7] = 0x7F;
  EXPECT_THROW(deserialize_bundle(with_checksum(bytes)), FormatError);
}

TEST(Bundle, BadMagic) {
  auto bytes = small_bundle();
  bytes[0] = 'X';
  EXPECT_THROW(deserialize_bundle(bytes), FormatError);
  EXPECT_THROW(deserialize_bundle("short"), FormatError);
}

}  // namespace
}  // namespace revdetect
