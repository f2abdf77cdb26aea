#include "ccs/profile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ccs/errors.hpp"

#include "json.hpp"

namespace ccs {

using nlohmann::json;

std::string_view to_string(UndeclaredPolicy p) {
  return p == UndeclaredPolicy::TreatAsWeak ? "treat_as_weak" : "reject";
}

UndeclaredPolicy undeclared_policy_from_string(std::string_view s) {
  if (s == "treat_as_weak") return UndeclaredPolicy::TreatAsWeak;
  if (s == "reject") return UndeclaredPolicy::Reject;
  throw ValidationError("unknown undeclared_policy: '" + std::string(s) + "'",
                        "undeclared_policy");
}

namespace {

std::set<DomainLabel> parse_label_array(const json& j, const std::string& field) {
  if (!j.is_array()) throw ValidationError("expected an array of strings", field);
  std::set<DomainLabel> labels;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& entry = j[i];
    if (!entry.is_string()) {
      throw ValidationError("expected a string", field + "[" + std::to_string(i) + "]");
    }
    labels.insert(DomainLabel::normalize(entry.get<std::string>()));
  }
  return labels;
}

void check_disjoint(const std::set<DomainLabel>& a, const std::set<DomainLabel>& b,
                    const std::string& name_a, const std::string& name_b) {
  for (const auto& label : a) {
    if (b.count(label)) {
      throw ValidationError("domain '" + label.str() + "' appears in both " + name_a + " and " +
                                name_b,
                            name_b);
    }
  }
}

bool is_plain_token(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char ch : s) {
    if (!(std::islower(ch) || std::isdigit(ch))) return false;
  }
  return true;
}

}  // namespace

CapabilityProfile parse_profile(const std::string& document) {
  json j;
  try {
    j = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("profile document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("profile document must be a JSON object");

  static const std::set<std::string> kKnownKeys = {
      "id", "strong", "mixed", "weak", "vocabulary", "alignment_threshold", "undeclared_policy"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!kKnownKeys.count(key)) throw ValidationError("unknown key in profile document", key);
  }

  CapabilityProfile profile;
  if (!j.contains("id") || !j["id"].is_string() || j["id"].get<std::string>().empty()) {
    throw ValidationError("profile requires a non-empty string id", "id");
  }
  profile.id = j["id"].get<std::string>();

  profile.strong = j.contains("strong") ? parse_label_array(j["strong"], "strong")
                                        : std::set<DomainLabel>{};
  profile.mixed =
      j.contains("mixed") ? parse_label_array(j["mixed"], "mixed") : std::set<DomainLabel>{};
  profile.weak =
      j.contains("weak") ? parse_label_array(j["weak"], "weak") : std::set<DomainLabel>{};

  check_disjoint(profile.strong, profile.mixed, "strong", "mixed");
  check_disjoint(profile.strong, profile.weak, "strong", "weak");
  check_disjoint(profile.mixed, profile.weak, "mixed", "weak");
  if (profile.strong.empty() && profile.mixed.empty() && profile.weak.empty()) {
    throw ValidationError("at least one of strong/mixed/weak must be non-empty");
  }

  if (j.contains("alignment_threshold")) {
    if (!j["alignment_threshold"].is_number()) {
      throw ValidationError("alignment_threshold must be a number", "alignment_threshold");
    }
    profile.alignment_threshold = j["alignment_threshold"].get<double>();
    if (!(profile.alignment_threshold >= 0.0 && profile.alignment_threshold <= 1.0)) {
      throw ValidationError("alignment_threshold out of range [0,1]", "alignment_threshold");
    }
  }

  if (j.contains("undeclared_policy")) {
    if (!j["undeclared_policy"].is_string()) {
      throw ValidationError("undeclared_policy must be a string", "undeclared_policy");
    }
    profile.undeclared_policy =
        undeclared_policy_from_string(j["undeclared_policy"].get<std::string>());
  }

  if (j.contains("vocabulary")) {
    const auto& vocab = j["vocabulary"];
    if (!vocab.is_object()) throw ValidationError("vocabulary must be an object", "vocabulary");
    for (const auto& [raw_key, words] : vocab.items()) {
      DomainLabel key = DomainLabel::normalize(raw_key);
      if (!profile.strong.count(key) && !profile.mixed.count(key) && !profile.weak.count(key)) {
        throw ValidationError("vocabulary key '" + key.str() + "' is not a declared domain",
                              "vocabulary." + raw_key);
      }
      if (!words.is_array()) {
        throw ValidationError("expected an array of keywords", "vocabulary." + raw_key);
      }
      std::vector<std::string> list;
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (!words[i].is_string()) {
          throw ValidationError("keyword must be a string",
                                "vocabulary." + raw_key + "[" + std::to_string(i) + "]");
        }
        std::string word = words[i].get<std::string>();
        if (!is_plain_token(word)) {
          throw ValidationError("keyword must be a single lowercase alphanumeric token: '" +
                                    word + "'",
                                "vocabulary." + raw_key + "[" + std::to_string(i) + "]");
        }
        list.push_back(std::move(word));
      }
      profile.vocabulary[key] = std::move(list);
    }
  }

  return profile;
}

CapabilityProfile load_profile_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open profile file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_profile(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what(), e.field_path());
  }
}

std::string serialize_profile(const CapabilityProfile& profile) {
  json j;
  j["id"] = profile.id;
  auto labels = [](const std::set<DomainLabel>& set) {
    json arr = json::array();
    for (const auto& label : set) arr.push_back(label.str());
    return arr;
  };
  j["strong"] = labels(profile.strong);
  j["mixed"] = labels(profile.mixed);
  j["weak"] = labels(profile.weak);
  json vocab = json::object();
  for (const auto& [key, words] : profile.vocabulary) vocab[key.str()] = words;
  j["vocabulary"] = vocab;
  j["alignment_threshold"] = profile.alignment_threshold;
  j["undeclared_policy"] = std::string(to_string(profile.undeclared_policy));
  return j.dump(2) + "\n";
}

Partition classify_domain(const CapabilityProfile& profile, const DomainLabel& label) {
  if (profile.strong.count(label)) return Partition::Strong;
  if (profile.mixed.count(label)) return Partition::Mixed;
  if (profile.weak.count(label)) return Partition::Weak;
  return Partition::Undeclared;
}

namespace {

// Per-domain evidence keywords shared by both bundled profiles. The strong
// side of PCS-NLP deliberately owns the quantitative/notational terms that
// technical phrasings of psychology, logic, and econometrics questions lean
// on, so prompt-evidence alignment can separate them.
const std::map<std::string, std::vector<std::string>>& domain_keywords() {
  static const std::map<std::string, std::vector<std::string>> kWords = {
      {"machine_learning",
       {"gradient", "neural", "classifier", "regression", "overfitting", "inference", "model",
        "bayesian", "probability", "likelihood", "feature", "dataset", "kernel", "clustering",
        "supervised", "unsupervised", "entropy", "optimization", "prediction", "variance",
        "estimator", "sample", "distribution", "correlation", "hyperparameter"}},
      {"college_computer_science",
       {"algorithm", "recursion", "complexity", "automaton", "compiler", "pointer", "hash",
        "graph", "sorting", "binary", "boolean", "turing", "stack", "queue", "cache",
        "concurrency", "semantics", "proof", "induction", "invariant", "asymptotic",
        "notation"}},
      {"professional_psychology",
       {"therapy", "therapist", "psychotherapy", "disorder", "anxiety", "depression",
        "cognitive", "behavioral", "counseling", "psychologist", "personality", "psychometric",
        "comorbid", "clinician", "intake", "rapport", "transference", "reinforcement",
        "conditioning", "dsm"}},
      {"formal_logic",
       {"syllogism", "quantifier", "predicate", "tautology", "contradiction", "validity",
        "premise", "conclusion", "propositional", "modal", "negation", "conditional",
        "biconditional", "contrapositive", "entailment", "soundness", "connective", "wff"}},
      {"econometrics",
       {"econometric", "endogeneity", "instrumental", "heteroskedasticity", "autocorrelation",
        "stationarity", "cointegration", "panel", "ols", "regressor", "multicollinearity",
        "elasticity", "macroeconomic", "gdp", "demand", "unemployment", "exogenous", "lag"}},
      {"clinical_knowledge",
       {"diagnosis", "symptom", "patient", "treatment", "clinical", "syndrome", "acute",
        "chronic", "lesion", "prognosis", "pathology", "etiology", "biopsy", "palliative",
        "dosage", "contraindication", "hypertension", "sepsis"}},
      {"medical_genetics",
       {"gene", "allele", "chromosome", "mutation", "genotype", "phenotype", "autosomal",
        "recessive", "dominant", "heredity", "genomic", "mitochondrial", "karyotype", "trisomy",
        "penetrance", "zygosity", "mendelian"}},
      {"professional_law",
       {"statute", "tort", "plaintiff", "defendant", "liability", "contract", "negligence",
        "jurisdiction", "precedent", "appellate", "felony", "misdemeanor", "injunction",
        "testimony", "subpoena", "litigation", "damages", "counsel"}},
      {"philosophy",
       {"epistemology", "metaphysics", "ontology", "ethics", "virtue", "utilitarian",
        "deontology", "phenomenology", "existentialism", "empiricism", "rationalism",
        "skepticism", "dualism", "categorical", "imperative", "dialectic", "aesthetics"}},
      {"european_history",
       {"monarchy", "empire", "revolution", "treaty", "reformation", "renaissance",
        "enlightenment", "feudal", "napoleon", "versailles", "reich", "czar", "parliament",
        "crusade", "dynasty", "armistice", "colonial", "nobility"}},
  };
  return kWords;
}

CapabilityProfile make_profile(const std::string& id, const std::vector<std::string>& strong,
                               const std::vector<std::string>& mixed,
                               const std::vector<std::string>& weak) {
  CapabilityProfile p;
  p.id = id;
  for (const auto& s : strong) p.strong.insert(DomainLabel::from_normalized(s));
  for (const auto& s : mixed) p.mixed.insert(DomainLabel::from_normalized(s));
  for (const auto& s : weak) p.weak.insert(DomainLabel::from_normalized(s));
  const auto& words = domain_keywords();
  for (const auto* set : {&p.strong, &p.mixed, &p.weak}) {
    for (const auto& label : *set) {
      auto it = words.find(label.str());
      if (it != words.end()) p.vocabulary[label] = it->second;
    }
  }
  return p;
}

}  // namespace

const std::vector<CapabilityProfile>& builtin_profiles() {
  static const std::vector<CapabilityProfile> kProfiles = {
      make_profile("pcs-nlp", {"machine_learning", "college_computer_science"},
                   {"professional_psychology", "formal_logic", "econometrics"},
                   {"clinical_knowledge", "medical_genetics", "professional_law", "philosophy",
                    "european_history"}),
      make_profile("pcs-litprof", {"philosophy", "european_history"},
                   {"professional_psychology", "formal_logic"},
                   {"machine_learning", "college_computer_science", "clinical_knowledge",
                    "medical_genetics", "professional_law"}),
  };
  return kProfiles;
}

const std::string& builtin_profile_text(const std::string& id) {
  static const std::map<std::string, std::string> kTexts = [] {
    std::map<std::string, std::string> texts;
    for (const auto& p : builtin_profiles()) texts[p.id] = serialize_profile(p);
    return texts;
  }();
  auto it = kTexts.find(id);
  if (it == kTexts.end()) throw ValidationError("unknown builtin profile: '" + id + "'");
  return it->second;
}

CapabilityProfile resolve_profile(const std::string& path_or_builtin_id) {
  for (const auto& p : builtin_profiles()) {
    if (p.id == path_or_builtin_id) return p;
  }
  return load_profile_file(path_or_builtin_id);
}

}  // namespace ccs
