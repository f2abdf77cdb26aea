#include "ccs/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "ccs/errors.hpp"
#include "ccs/util/digest.hpp"
#include "ccs/util/rng.hpp"

namespace ccs {

using nlohmann::json;

std::string prompt_text(const Item& item) {
  std::ostringstream out;
  out << item.question;
  static constexpr char kLetters[4] = {'A', 'B', 'C', 'D'};
  for (int i = 0; i < 4; ++i) {
    out << '\n' << kLetters[i] << ") " << item.choices[static_cast<std::size_t>(i)];
  }
  return out.str();
}

namespace {

// Subject inference from an MMLU-style file name: "machine_learning_test.csv"
// -> machine_learning.
DomainLabel subject_from_filename(const std::filesystem::path& path) {
  std::string stem = path.stem().string();
  for (const char* suffix : {"_test", "_val", "_dev", "_train"}) {
    if (stem.size() > std::strlen(suffix) && stem.ends_with(suffix)) {
      stem.resize(stem.size() - std::strlen(suffix));
      break;
    }
  }
  return DomainLabel::normalize(stem);
}

// Minimal RFC-4180 row parser: quoted fields, doubled quotes, commas inside
// quotes. One row per line (no embedded newlines; MMLU files do not use
// them).
std::vector<std::string> parse_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

int answer_index_from_letter(const std::string& letter, const std::string& where) {
  if (letter.size() == 1) {
    const char ch = static_cast<char>(std::toupper(static_cast<unsigned char>(letter[0])));
    if (ch >= 'A' && ch <= 'D') return ch - 'A';
  }
  throw ValidationError("answer must be a letter A-D, got '" + letter + "'", where);
}

std::vector<Item> load_items_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path.string());
  const DomainLabel subject = subject_from_filename(path);
  std::vector<Item> items;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = path.filename().string() + ":" + std::to_string(line_no);
    auto fields = parse_csv_row(line);
    if (fields.size() != 6) {
      throw ValidationError("expected 6 columns (question, 4 options, answer), got " +
                                std::to_string(fields.size()),
                            where);
    }
    Item item;
    char id_buf[16];
    std::snprintf(id_buf, sizeof(id_buf), "_%03zu", line_no);
    item.id = subject.str() + id_buf;
    item.subject = subject;
    item.question = fields[0];
    for (int i = 0; i < 4; ++i) item.choices[static_cast<std::size_t>(i)] = fields[i + 1];
    item.answer_index = answer_index_from_letter(fields[5], where);
    items.push_back(std::move(item));
  }
  return items;
}

std::vector<Item> load_items_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path.string());
  const DomainLabel fallback_subject = subject_from_filename(path);
  std::vector<Item> items;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = path.filename().string() + ":" + std::to_string(line_no);
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("malformed JSONL record: ") + e.what(), where);
    }
    Item item;
    try {
      j.at("id").get_to(item.id);
      j.at("question").get_to(item.question);
      const auto& choices = j.at("choices");
      if (!choices.is_array() || choices.size() != 4) {
        throw ValidationError("expected exactly 4 choices", where);
      }
      for (std::size_t i = 0; i < 4; ++i) choices[i].get_to(item.choices[i]);
      j.at("answer_index").get_to(item.answer_index);
      // Explicit subject overrides filename inference.
      item.subject = j.contains("subject")
                         ? DomainLabel::normalize(j["subject"].get<std::string>())
                         : fallback_subject;
      item.ambiguous = j.value("ambiguous", false);
    } catch (const json::exception& e) {
      throw ValidationError(std::string("malformed item record: ") + e.what(), where);
    }
    if (item.answer_index < 0 || item.answer_index > 3) {
      throw ValidationError("answer_index out of range [0,3]", where);
    }
    items.push_back(std::move(item));
  }
  return items;
}

}  // namespace

std::vector<Item> load_items(const std::filesystem::path& path, CorpusFormat format) {
  auto items = format == CorpusFormat::Csv ? load_items_csv(path) : load_items_jsonl(path);
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.id < b.id; });
  return items;
}

std::vector<Item> load_items(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".csv") return load_items(path, CorpusFormat::Csv);
  if (ext == ".jsonl" || ext == ".json") return load_items(path, CorpusFormat::Jsonl);
  throw ValidationError("cannot infer corpus format from extension: " + path.string());
}

std::map<std::string, bool> load_ambiguity_sidecar(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open ambiguity sidecar: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed ambiguity sidecar: ") + e.what(),
                          path.string());
  }
  if (!j.is_object()) throw ValidationError("ambiguity sidecar must be an object", path.string());
  std::map<std::string, bool> sidecar;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_boolean()) {
      throw ValidationError("ambiguity flag must be a boolean", path.string() + "." + key);
    }
    sidecar[key] = value.get<bool>();
  }
  return sidecar;
}

void apply_ambiguity(std::vector<Item>& items, const std::map<std::string, bool>& sidecar) {
  for (auto& item : items) {
    auto it = sidecar.find(item.id);
    if (it != sidecar.end()) item.ambiguous = it->second;
  }
}

std::vector<Item> sample_subset(const std::vector<Item>& items, std::size_t n, uint64_t seed) {
  if (n > items.size()) {
    throw ValidationError("insufficient items: requested " + std::to_string(n) + " of " +
                          std::to_string(items.size()));
  }
  std::vector<Item> pool = items;
  std::sort(pool.begin(), pool.end(), [](const Item& a, const Item& b) { return a.id < b.id; });
  rng::Stream stream(seed);
  // Partial Fisher-Yates: the first n slots end up holding the sample.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(stream.bounded(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(n);
  std::sort(pool.begin(), pool.end(), [](const Item& a, const Item& b) { return a.id < b.id; });
  return pool;
}

bool PairFilter::keeps(const DomainLabel& subject, const std::string& condition_id) const {
  for (const auto& rule : rules) {
    if (rule.condition && *rule.condition != condition_id) continue;
    if (rule.subjects && !rule.subjects->count(subject)) continue;
    return rule.keep;
  }
  return default_keep;
}

PairFilter PairFilter::from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("pair filter must be a JSON object");
  PairFilter filter;
  filter.default_keep = j.value("default_keep", true);
  if (j.contains("rules")) {
    if (!j["rules"].is_array()) throw ValidationError("rules must be an array", "rules");
    for (const auto& rj : j["rules"]) {
      PairFilterRule rule;
      if (rj.contains("condition")) rule.condition = rj["condition"].get<std::string>();
      if (rj.contains("subjects")) {
        std::set<DomainLabel> subjects;
        for (const auto& s : rj["subjects"]) {
          subjects.insert(DomainLabel::normalize(s.get<std::string>()));
        }
        rule.subjects = std::move(subjects);
      }
      rule.keep = rj.value("keep", true);
      filter.rules.push_back(std::move(rule));
    }
  }
  return filter;
}

PairFilter PairFilter::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open pair filter: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed pair filter: ") + e.what(), path.string());
  }
  return from_json(j);
}

ExpandResult expand_conditions(const std::vector<Item>& items,
                               const std::vector<Condition>& conditions,
                               const PairFilter& filter) {
  if (conditions.empty()) throw ValidationError("expand_conditions requires conditions");
  ExpandResult result;
  result.raw_count = items.size() * conditions.size();
  for (const auto& condition : conditions) {
    for (const auto& item : items) {
      if (filter.keeps(item.subject, condition.id)) {
        result.pairs.push_back({item, condition});
      } else {
        ++result.filtered_out;
      }
    }
  }
  return result;
}

std::vector<Persona> load_personas(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open persona corpus: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed persona corpus: ") + e.what(), path.string());
  }
  if (!j.is_object() || !j.contains("personas") || !j["personas"].is_array()) {
    throw ValidationError("persona corpus must be an object with a personas array",
                          path.string());
  }
  std::vector<Persona> personas;
  std::size_t index = 0;
  for (const auto& pj : j["personas"]) {
    const std::string where = "personas[" + std::to_string(index++) + "]";
    Persona persona;
    if (!pj.contains("role") || !pj["role"].is_string()) {
      throw ValidationError("persona requires a role string", where + ".role");
    }
    persona.role = pj["role"].get<std::string>();
    if (!pj.contains("zones") || !pj["zones"].is_object()) {
      throw ValidationError("persona requires a zones object", where + ".zones");
    }
    for (const char* zone : kPersonaZones) {
      if (!pj["zones"].contains(zone)) {
        throw ValidationError("persona '" + persona.role + "' is missing zone '" + zone + "'",
                              where + ".zones." + zone);
      }
      std::vector<std::string> prompts;
      for (const auto& prompt : pj["zones"][zone]) prompts.push_back(prompt.get<std::string>());
      persona.zones[zone] = std::move(prompts);
    }
    personas.push_back(std::move(persona));
  }
  return personas;
}

std::vector<Item> persona_items(const Persona& persona) {
  std::vector<Item> items;
  const DomainLabel role = DomainLabel::normalize(persona.role);
  for (const char* zone : kPersonaZones) {
    auto it = persona.zones.find(zone);
    if (it == persona.zones.end()) continue;
    const DomainLabel subject = DomainLabel::normalize(role.str() + "_" + zone);
    std::size_t index = 0;
    for (const auto& prompt : it->second) {
      Item item;
      char id_buf[16];
      std::snprintf(id_buf, sizeof(id_buf), "_%03zu", ++index);
      item.id = subject.str() + id_buf;
      item.subject = subject;
      item.question = prompt;
      // Scenario prompts are open-ended; Items still require four choices.
      item.choices = {"", "", "", ""};
      item.answer_index = 0;
      items.push_back(std::move(item));
    }
  }
  return items;
}

std::string corpus_digest(const std::vector<Item>& items) {
  std::vector<const Item*> sorted;
  sorted.reserve(items.size());
  for (const auto& item : items) sorted.push_back(&item);
  std::sort(sorted.begin(), sorted.end(),
            [](const Item* a, const Item* b) { return a->id < b->id; });
  std::string blob;
  for (const Item* item : sorted) {
    json j{{"id", item->id},
           {"subject", item->subject.str()},
           {"question", item->question},
           {"choices", item->choices},
           {"answer_index", item->answer_index},
           {"ambiguous", item->ambiguous}};
    blob += j.dump();
    blob.push_back('\n');
  }
  return digest::sha256_hex(blob);
}

}  // namespace ccs
