#include <fstream>

#include <nlohmann/json.hpp>

#include "scopegate/model.hpp"

namespace scopegate {

// Backdoor for rebuilding a Vocabulary from serialized state.
struct VocabularyAccess {
  static Vocabulary make(std::vector<std::string> terms,
                         std::vector<uint32_t> dfs, uint32_t min_df,
                         uint64_t num_docs) {
    Vocabulary v;
    v.terms_ = std::move(terms);
    v.doc_freq_ = std::move(dfs);
    v.min_df_ = min_df;
    v.num_docs_ = num_docs;
    v.rebuild_index();
    return v;
  }
};

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;

json nodes_to_json(const std::vector<TreeNode>& nodes) {
  json arr = json::array();
  for (const TreeNode& n : nodes) {
    arr.push_back({n.feature, n.threshold, n.left, n.right, n.label});
  }
  return arr;
}

std::vector<TreeNode> nodes_from_json(const json& arr) {
  std::vector<TreeNode> nodes;
  nodes.reserve(arr.size());
  for (const auto& e : arr) {
    TreeNode n;
    n.feature = e.at(0).get<int32_t>();
    n.threshold = e.at(1).get<double>();
    n.left = e.at(2).get<int32_t>();
    n.right = e.at(3).get<int32_t>();
    n.label = e.at(4).get<int32_t>();
    nodes.push_back(n);
  }
  return nodes;
}

json space_to_json(const FeatureSpace& s) {
  json j;
  j["type"] = s.type == FeatureSpace::Type::BoW ? "bow" : "structural";
  j["selected"] = s.selected;
  if (s.type == FeatureSpace::Type::BoW) {
    j["portion"] = s.portion.to_string();
    j["weighting"] = std::string(weighting_name(s.weighting));
    j["stopwords"] = s.stopwords;
    json terms = json::array();
    for (uint32_t i = 0; i < s.vocab.size(); ++i) {
      terms.push_back({s.vocab.term(i), s.vocab.doc_freq(i)});
    }
    j["vocab"] = {{"min_df", s.vocab.min_df()},
                  {"num_docs", s.vocab.num_docs()},
                  {"terms", std::move(terms)}};
  }
  return j;
}

FeatureSpace space_from_json(const json& j) {
  FeatureSpace s;
  s.type = j.at("type").get<std::string>() == "bow"
               ? FeatureSpace::Type::BoW
               : FeatureSpace::Type::Structural;
  s.selected = j.at("selected").get<std::vector<uint32_t>>();
  if (s.type == FeatureSpace::Type::BoW) {
    s.portion = PortionMode::parse(j.at("portion").get<std::string>());
    s.weighting = parse_weighting(j.at("weighting").get<std::string>());
    s.stopwords = j.at("stopwords").get<std::vector<std::string>>();
    const json& v = j.at("vocab");
    std::vector<std::string> terms;
    std::vector<uint32_t> dfs;
    for (const auto& e : v.at("terms")) {
      terms.push_back(e.at(0).get<std::string>());
      dfs.push_back(e.at(1).get<uint32_t>());
    }
    s.vocab = VocabularyAccess::make(std::move(terms), std::move(dfs),
                                     v.at("min_df").get<uint32_t>(),
                                     v.at("num_docs").get<uint64_t>());
  }
  return s;
}

json impl_to_json(const TrainedModel::Impl& impl) {
  json j;
  if (const auto* gnb = std::get_if<GaussianNB>(&impl)) {
    j["log_prior"] = gnb->log_prior;
    j["mean"] = {gnb->mean_[0], gnb->mean_[1]};
    j["var"] = {gnb->var_[0], gnb->var_[1]};
  } else if (const auto* mnb = std::get_if<MultinomialNB>(&impl)) {
    j["log_prior"] = mnb->log_prior;
    j["log_theta"] = {mnb->log_theta_[0], mnb->log_theta_[1]};
  } else if (const auto* dt = std::get_if<DecisionTree>(&impl)) {
    j["nodes"] = nodes_to_json(dt->nodes_);
  } else if (const auto* rf = std::get_if<RandomForest>(&impl)) {
    json trees = json::array();
    for (const DecisionTree& t : rf->trees_) trees.push_back(nodes_to_json(t.nodes_));
    j["trees"] = std::move(trees);
  } else if (const auto* svm = std::get_if<LinearSvm>(&impl)) {
    j["weights"] = svm->weights_;
    j["bias"] = svm->bias_;
    j["lambda"] = svm->lambda_;
  }
  return j;
}

TrainedModel::Impl impl_from_json(ModelKind kind, const json& j) {
  switch (kind) {
    case ModelKind::GNB: {
      GaussianNB m;
      m.log_prior = j.at("log_prior").get<std::array<double, 2>>();
      m.mean_[0] = j.at("mean").at(0).get<std::vector<double>>();
      m.mean_[1] = j.at("mean").at(1).get<std::vector<double>>();
      m.var_[0] = j.at("var").at(0).get<std::vector<double>>();
      m.var_[1] = j.at("var").at(1).get<std::vector<double>>();
      m.finalize();
      return m;
    }
    case ModelKind::MNB: {
      MultinomialNB m;
      m.log_prior = j.at("log_prior").get<std::array<double, 2>>();
      m.log_theta_[0] = j.at("log_theta").at(0).get<std::vector<double>>();
      m.log_theta_[1] = j.at("log_theta").at(1).get<std::vector<double>>();
      return m;
    }
    case ModelKind::DT: {
      DecisionTree t;
      t.nodes_ = nodes_from_json(j.at("nodes"));
      return t;
    }
    case ModelKind::RF: {
      RandomForest f;
      for (const auto& e : j.at("trees")) {
        DecisionTree t;
        t.nodes_ = nodes_from_json(e);
        f.trees_.push_back(std::move(t));
      }
      return f;
    }
    case ModelKind::LinearSVM: {
      LinearSvm s;
      s.weights_ = j.at("weights").get<std::vector<double>>();
      s.bias_ = j.at("bias").get<double>();
      s.lambda_ = j.at("lambda").get<double>();
      return s;
    }
  }
  throw ModelError("unknown model kind in file");
}

}  // namespace

void TrainedModel::save(const std::filesystem::path& path,
                        std::string_view fingerprint) const {
  json j;
  j["format"] = "scopegate-model";
  j["format_version"] = kFormatVersion;
  if (!fingerprint.empty()) j["fingerprint"] = std::string(fingerprint);
  j["kind"] = std::string(model_kind_name(kind_));
  j["input_dim"] = input_dim_;
  j["hyperparams"] = {{"svm_c", params_.svm_c}, {"rf_trees", params_.rf_trees}};
  j["feature_space"] = space_to_json(space_);
  j["model"] = impl_to_json(impl_);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw ModelError("cannot write model file: " + path.string());
  out << j.dump(1, '\t') << '\n';
  if (!out) throw ModelError("failed writing model file: " + path.string());
}

TrainedModel TrainedModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError("cannot open model file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ModelError("bad model file " + path.string() + ": " + e.what());
  }
  if (j.value("format", "") != "scopegate-model" ||
      j.value("format_version", 0) != kFormatVersion) {
    throw ModelError("unsupported model format in " + path.string());
  }
  const ModelKind kind = parse_model_kind(j.at("kind").get<std::string>());
  Hyperparams params;
  params.svm_c = j.at("hyperparams").at("svm_c").get<double>();
  params.rf_trees = j.at("hyperparams").at("rf_trees").get<int>();
  return TrainedModel(kind, impl_from_json(kind, j.at("model")),
                      space_from_json(j.at("feature_space")),
                      j.at("input_dim").get<size_t>(), params);
}

}  // namespace scopegate
