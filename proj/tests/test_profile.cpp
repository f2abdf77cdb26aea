#include "doctest.h"

#include <fstream>
#include <sstream>

#include "ccs/errors.hpp"
#include "ccs/profile.hpp"
#include "ccs/util/rng.hpp"

using namespace ccs;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::string kTestData = std::string(CCS_SOURCE_DIR) + "/tests/data/";

}  // namespace

TEST_CASE("domain label normalization") {
  CHECK(DomainLabel::normalize("Machine Learning").str() == "machine_learning");
  CHECK(DomainLabel::normalize("College  Computer-Science!").str() ==
        "college_computer_science");
  CHECK(DomainLabel::normalize("machine_learning").str() == "machine_learning");
  CHECK_THROWS_AS(DomainLabel::normalize("  --  "), ValidationError);

  // Idempotence over arbitrary inputs.
  rng::Stream stream(99);
  for (int i = 0; i < 200; ++i) {
    std::string raw;
    const int len = 1 + static_cast<int>(stream.bounded(24));
    for (int k = 0; k < len; ++k) raw.push_back(static_cast<char>(32 + stream.bounded(95)));
    try {
      const DomainLabel once = DomainLabel::normalize(raw);
      const DomainLabel twice = DomainLabel::normalize(once.str());
      CHECK(once == twice);
    } catch (const ValidationError&) {
      // nothing alphanumeric in raw
    }
  }
}

TEST_CASE("parse_profile accepts the NLP-oriented document") {
  const std::string doc = R"({
    "id": "pcs-nlp",
    "strong": ["Machine Learning", "College Computer Science"],
    "mixed": ["Professional Psychology", "Formal Logic", "Econometrics"],
    "weak": ["Clinical Knowledge", "Medical Genetics", "Professional Law",
             "Philosophy", "European History"]
  })";
  const CapabilityProfile p = parse_profile(doc);
  CHECK(p.id == "pcs-nlp");
  CHECK(p.strong.size() == 2);
  CHECK(p.strong.count(DomainLabel::normalize("machine_learning")) == 1);
  CHECK(p.mixed.size() == 3);
  CHECK(p.weak.size() == 5);
  CHECK(p.alignment_threshold == 0.5);
  CHECK(p.undeclared_policy == UndeclaredPolicy::TreatAsWeak);
}

TEST_CASE("parse_profile rejects partition overlap naming the label") {
  try {
    load_profile_file(kTestData + "overlap-profile.json");
    FAIL("expected overlap error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("machine_learning") != std::string::npos);
  }
}

TEST_CASE("parse_profile schema errors carry field paths") {
  CHECK_THROWS_AS(load_profile_file(kTestData + "unknown-key.json"), ValidationError);
  CHECK_THROWS_AS(load_profile_file(kTestData + "bad-threshold.json"), ValidationError);
  CHECK_THROWS_AS(parse_profile("{\"id\": \"x\"}"), ValidationError);  // all partitions empty
  CHECK_THROWS_AS(parse_profile("not json at all"), ValidationError);
  // vocabulary key outside every partition
  CHECK_THROWS_AS(
      parse_profile(R"({"id":"x","strong":["a"],"vocabulary":{"b":["w"]}})"),
      ValidationError);
}

TEST_CASE("builtin profiles match the published partitions") {
  const auto& profiles = builtin_profiles();
  REQUIRE(profiles.size() == 2);
  const CapabilityProfile& nlp = profiles[0];
  const CapabilityProfile& lit = profiles[1];
  CHECK(nlp.id == "pcs-nlp");
  CHECK(lit.id == "pcs-litprof");

  CHECK(nlp.strong.count(DomainLabel::normalize("college_computer_science")) == 1);
  CHECK(nlp.weak.count(DomainLabel::normalize("philosophy")) == 1);

  // pcs-litprof leaves econometrics out of every partition.
  const DomainLabel econ = DomainLabel::normalize("econometrics");
  CHECK(lit.strong.count(econ) == 0);
  CHECK(lit.mixed.count(econ) == 0);
  CHECK(lit.weak.count(econ) == 0);
  CHECK(classify_domain(lit, econ) == Partition::Undeclared);

  // Every builtin domain carries a non-trivial vocabulary.
  for (const auto& p : profiles) {
    for (const auto* set : {&p.strong, &p.mixed, &p.weak}) {
      for (const auto& label : *set) {
        REQUIRE(p.vocabulary.count(label) == 1);
        CHECK(p.vocabulary.at(label).size() >= 15);
      }
    }
  }
}

TEST_CASE("bundled profile files are byte-identical to the builtin texts") {
  for (const char* id : {"pcs-nlp", "pcs-litprof"}) {
    const std::string file = read_file(std::string(CCS_SOURCE_DIR) + "/profiles/" + id);
    CHECK(file == builtin_profile_text(id));
    CHECK(parse_profile(file) ==
          (std::string(id) == "pcs-nlp" ? builtin_profiles()[0] : builtin_profiles()[1]));
  }
}

TEST_CASE("classify_domain follows the partition sets") {
  const CapabilityProfile& nlp = builtin_profiles()[0];
  const CapabilityProfile& lit = builtin_profiles()[1];
  const DomainLabel ml = DomainLabel::normalize("machine_learning");
  CHECK(classify_domain(nlp, ml) == Partition::Strong);
  CHECK(classify_domain(nlp, DomainLabel::normalize("philosophy")) == Partition::Weak);
  CHECK(classify_domain(nlp, DomainLabel::normalize("econometrics")) == Partition::Mixed);
  CHECK(classify_domain(nlp, DomainLabel::normalize("astrology")) == Partition::Undeclared);

  // Profile inversion at the classification level.
  CHECK(classify_domain(nlp, ml) == Partition::Strong);
  CHECK(classify_domain(lit, ml) == Partition::Weak);
}

TEST_CASE("serialize/parse round trip") {
  for (const auto& p : builtin_profiles()) {
    CHECK(parse_profile(serialize_profile(p)) == p);
  }
  CapabilityProfile custom;
  custom.id = "custom";
  custom.strong.insert(DomainLabel::normalize("alpha"));
  custom.weak.insert(DomainLabel::normalize("beta"));
  custom.vocabulary[DomainLabel::normalize("alpha")] = {"one", "two"};
  custom.alignment_threshold = 0.25;
  custom.undeclared_policy = UndeclaredPolicy::Reject;
  CHECK(parse_profile(serialize_profile(custom)) == custom);
}

TEST_CASE("resolve_profile prefers builtins and falls back to files") {
  CHECK(resolve_profile("pcs-litprof").id == "pcs-litprof");
  CHECK(resolve_profile(kTestData + "reject-profile.json").undeclared_policy ==
        UndeclaredPolicy::Reject);
  CHECK_THROWS_AS(resolve_profile("no/such/file.json"), IoError);
}
