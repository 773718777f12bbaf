#include "run_config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "scopegate/csv.hpp"
#include "scopegate/textproc.hpp"

namespace scopegate::cli {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& piece : split_list(text)) {
    int v = 0;
    auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc() || p != piece.data() + piece.size()) {
      throw std::invalid_argument("bad integer '" + piece + "' in list");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& piece : split_list(text)) {
    try {
      size_t pos = 0;
      out.push_back(std::stod(piece, &pos));
      if (pos != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number '" + piece + "' in list");
    }
  }
  return out;
}

std::vector<uint64_t> parse_seed_list(const std::string& text) {
  std::vector<uint64_t> out;
  for (const std::string& piece : split_list(text)) {
    uint64_t v = 0;
    auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc() || p != piece.data() + piece.size()) {
      throw std::invalid_argument("bad seed '" + piece + "' in list");
    }
    out.push_back(v);
  }
  return out;
}

void RunConfig::apply_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open config file: " + path.string());

  using Setter = std::function<void(RunConfig&, const std::string&)>;
  static const std::map<std::pair<std::string, std::string>, Setter> setters = {
      {{"corpus", "manifest"}, [](RunConfig& c, const std::string& v) { c.manifest = v; }},
      {{"corpus", "text-dir"}, [](RunConfig& c, const std::string& v) { c.text_dir = v; }},
      {{"corpus", "pool-manifest"}, [](RunConfig& c, const std::string& v) { c.pool_manifest = v; }},
      {{"split", "ratios"}, [](RunConfig& c, const std::string& v) { c.ratios = v; }},
      {{"split", "seed"}, [](RunConfig& c, const std::string& v) { c.seed = std::stoull(v); }},
      {{"eval", "seeds"}, [](RunConfig& c, const std::string& v) { c.seeds = v; }},
      {{"eval", "target-neg-to-pos"}, [](RunConfig& c, const std::string& v) { c.target_neg_to_pos = std::stod(v); }},
      {{"features", "features"}, [](RunConfig& c, const std::string& v) { c.features = v; }},
      {{"features", "portion"}, [](RunConfig& c, const std::string& v) { c.portion = v; }},
      {{"features", "weighting"}, [](RunConfig& c, const std::string& v) { c.weighting = v; }},
      {{"features", "min-df"}, [](RunConfig& c, const std::string& v) { c.min_df = static_cast<uint32_t>(std::stoul(v)); }},
      {{"features", "top-n"}, [](RunConfig& c, const std::string& v) { c.top_n = std::stoi(v); }},
      {{"models", "model"}, [](RunConfig& c, const std::string& v) { c.model = v; }},
      {{"models", "svm-c"}, [](RunConfig& c, const std::string& v) { c.svm_c = v; }},
      {{"models", "rf-trees"}, [](RunConfig& c, const std::string& v) { c.rf_trees = v; }},
      {{"textproc", "stopwords"}, [](RunConfig& c, const std::string& v) { c.stopwords = v; }},
      {{"output", "out-dir"}, [](RunConfig& c, const std::string& v) { c.out_dir = v; }},
      {{"sweep", "axis"}, [](RunConfig& c, const std::string& v) { c.axis = v; }},
      {{"sweep", "x-values"}, [](RunConfig& c, const std::string& v) { c.x_values = v; }},
      {{"sweep", "n-values"}, [](RunConfig& c, const std::string& v) { c.n_values = v; }},
  };

  std::string line, section;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw CorpusError("config line " + std::to_string(line_no) +
                          ": unterminated section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CorpusError("config line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto it = setters.find({section, key});
    if (it == setters.end()) {
      throw CorpusError("config line " + std::to_string(line_no) +
                        ": unknown option [" + section + "] " + key);
    }
    try {
      it->second(*this, value);
    } catch (const CorpusError&) {
      throw;
    } catch (const std::exception&) {
      throw CorpusError("config line " + std::to_string(line_no) +
                        ": bad value for [" + section + "] " + key);
    }
  }
}

void RunConfig::apply_env() {
  if (const char* env = std::getenv("SCOPEGATE_STOPWORDS"); env && *env) {
    stopwords = env;
  }
}

std::string RunConfig::dump() const {
  std::string out;
  const auto field = [&](std::string_view key, const std::string& value) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  };
  field("corpus.manifest", manifest);
  field("corpus.text-dir", text_dir);
  field("corpus.pool-manifest", pool_manifest);
  field("split.ratios", ratios);
  field("split.seed", std::to_string(seed));
  field("eval.seeds", seeds);
  field("eval.target-neg-to-pos", format_double(target_neg_to_pos));
  field("features.features", features);
  field("features.portion", portion);
  field("features.weighting", weighting);
  field("features.min-df", std::to_string(min_df));
  field("features.top-n", std::to_string(top_n));
  field("models.model", model);
  field("models.svm-c", svm_c);
  field("models.rf-trees", rf_trees);
  field("textproc.stopwords", stopwords);
  field("output.out-dir", out_dir);
  field("sweep.axis", axis);
  field("sweep.x-values", x_values);
  field("sweep.n-values", n_values);
  return out;
}

std::string RunConfig::fingerprint() const {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : dump()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SplitRatios RunConfig::parsed_ratios() const {
  const auto parts = parse_double_list(ratios);
  if (parts.size() != 3) {
    throw std::invalid_argument("ratios must be three comma-separated numbers");
  }
  return {parts[0], parts[1], parts[2]};
}

std::vector<uint64_t> RunConfig::parsed_seeds() const {
  auto out = parse_seed_list(seeds);
  if (out.empty()) throw std::invalid_argument("seed list is empty");
  return out;
}

PortionMode RunConfig::parsed_portion() const {
  return PortionMode::parse(portion);
}

WeightingScheme RunConfig::parsed_weighting() const {
  return parse_weighting(weighting);
}

ModelKind RunConfig::parsed_model() const { return parse_model_kind(model); }

HyperGrid RunConfig::parsed_grid() const {
  HyperGrid grid;
  grid.svm_c = parse_double_list(svm_c);
  grid.rf_trees = parse_int_list(rf_trees);
  if (grid.svm_c.empty() || grid.rf_trees.empty()) {
    throw std::invalid_argument("hyperparameter grids must be non-empty");
  }
  return grid;
}

std::vector<int> RunConfig::parsed_x_values() const {
  return parse_int_list(x_values);
}

std::vector<int> RunConfig::parsed_n_values() const {
  return parse_int_list(n_values);
}

SweepAxis RunConfig::parsed_sweep_axis() const {
  SweepAxis out;
  if (axis == "portion") {
    out.kind = SweepAxis::Kind::Portion;
    out.values = x_values.empty() ? SweepAxis::default_portion_x() : parsed_x_values();
  } else if (axis == "bow-top-n") {
    out.kind = SweepAxis::Kind::TopNBow;
    out.values = n_values.empty() ? SweepAxis::default_bow_n() : parsed_n_values();
  } else if (axis == "str-top-n") {
    out.kind = SweepAxis::Kind::TopNStr;
    out.values = n_values.empty() ? SweepAxis::default_str_n() : parsed_n_values();
  } else {
    throw std::invalid_argument("unknown sweep axis '" + axis +
                                "' (portion, bow-top-n, str-top-n)");
  }
  return out;
}

FeatureAxis RunConfig::parsed_feature_axis() const {
  const PortionMode mode = parsed_portion();
  if (features == "bow") {
    if (top_n > 0) {
      if (mode.kind != PortionMode::Kind::All) {
        throw std::invalid_argument(
            "feature selection applies to full-text bag of words; use "
            "portion=all with top-n");
      }
      return FeatureAxis::fs_bow(top_n);
    }
    if (mode.kind == PortionMode::Kind::All) return FeatureAxis::bow_all();
    return FeatureAxis::bow_portion(mode);
  }
  if (features == "str" || features == "structural") {
    if (top_n > 0) return FeatureAxis::fs_structural(top_n);
    return FeatureAxis::structural();
  }
  throw std::invalid_argument("unknown feature type '" + features +
                              "' (bow, str)");
}

std::vector<std::string> RunConfig::load_stopword_list() const {
  if (stopwords.empty()) return default_stopword_list();
  const auto set = load_stopwords(stopwords);
  std::vector<std::string> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

ExperimentPlan RunConfig::make_plan() const {
  ExperimentPlan plan;
  plan.ratios = parsed_ratios();
  plan.target_neg_to_pos = target_neg_to_pos;
  plan.axis = parsed_feature_axis();
  plan.model = parsed_model();
  plan.weighting = parsed_weighting();
  plan.min_df = min_df;
  plan.grid = parsed_grid();
  plan.seeds = parsed_seeds();
  plan.stopwords = load_stopword_list();
  return plan;
}

}  // namespace scopegate::cli
