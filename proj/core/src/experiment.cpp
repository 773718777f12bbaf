#include "scopegate/experiment.hpp"

#include <algorithm>

#include "scopegate/info_gain.hpp"
#include "scopegate/rng.hpp"
#include "scopegate/structural.hpp"

namespace scopegate {

std::string FeatureAxis::label() const {
  switch (kind) {
    case Kind::BowAll:
      return "bow-all";
    case Kind::BowPortion:
      return "bow-" + portion.to_string();
    case Kind::FsBow:
      return "fs-bow-" + std::to_string(top_n);
    case Kind::Str:
      return "str";
    case Kind::FsStr:
      return "fs-str-" + std::to_string(top_n);
  }
  return "bow-all";
}

namespace {

bool axis_is_bow(FeatureAxis::Kind k) {
  return k == FeatureAxis::Kind::BowAll || k == FeatureAxis::Kind::BowPortion ||
         k == FeatureAxis::Kind::FsBow;
}

void touch(AccessAudit* audit, const Document& d, AccessAudit::Stage stage) {
  if (audit) audit->note(d.id, stage);
}

std::vector<int> doc_labels(const std::vector<Document>& docs) {
  std::vector<int> labels;
  labels.reserve(docs.size());
  for (const Document& d : docs) {
    labels.push_back(d.label == Label::InScope ? 1 : 0);
  }
  return labels;
}

}  // namespace

BuiltFeatures build_features(const std::vector<Document>& train_docs,
                             const FeatureAxis& axis, WeightingScheme weighting,
                             uint32_t min_df, std::vector<std::string> stopwords,
                             AccessAudit* audit) {
  std::vector<int> labels = doc_labels(train_docs);

  if (axis_is_bow(axis.kind)) {
    const PortionMode portion = axis.kind == FeatureAxis::Kind::BowPortion
                                    ? axis.portion
                                    : PortionMode::all();
    FeatureSpace space = FeatureSpace::bag_of_words(Vocabulary(), portion,
                                                    weighting, std::move(stopwords));

    std::vector<TokenStream> prepared;
    prepared.reserve(train_docs.size());
    for (const Document& d : train_docs) {
      touch(audit, d, AccessAudit::Stage::TrainFeatures);
      TokenStream raw = tokenize(d.joined_text(), d.id);
      prepared.push_back(
          preprocess(take_portion(raw, portion), space.stopword_set()));
    }
    space.vocab = Vocabulary::build(prepared, min_df);

    std::vector<SparseVector> vecs;
    vecs.reserve(prepared.size());
    for (const TokenStream& p : prepared) {
      vecs.push_back(vectorize(p, space.vocab, weighting));
    }

    if (axis.kind == FeatureAxis::Kind::FsBow) {
      FeatureRanking ranking =
          information_gain_presence(vecs, labels, space.vocab.terms());
      space.select_features(
          select_top_n(ranking, static_cast<size_t>(axis.top_n)));
      for (SparseVector& v : vecs) v = space.reduce(v);
    }
    Dataset train(std::move(vecs), std::move(labels), space.dimension());
    return {std::move(space), std::move(train)};
  }

  FeatureSpace space = FeatureSpace::structural();
  std::vector<StructuralFeatures> feats;
  feats.reserve(train_docs.size());
  for (const Document& d : train_docs) {
    touch(audit, d, AccessAudit::Stage::TrainFeatures);
    feats.push_back(extract_structural(d));
  }

  if (axis.kind == FeatureAxis::Kind::FsStr) {
    std::vector<std::vector<double>> rows;
    rows.reserve(feats.size());
    for (const StructuralFeatures& f : feats) {
      rows.emplace_back(f.values.begin(), f.values.end());
    }
    const auto& names = structural_feature_names();
    FeatureRanking ranking =
        information_gain_thresholded(rows, labels, {names.begin(), names.end()});
    space.select_features(select_top_n(ranking, static_cast<size_t>(axis.top_n)));
  }

  std::vector<SparseVector> vecs;
  vecs.reserve(feats.size());
  for (const StructuralFeatures& f : feats) {
    vecs.push_back(space.reduce(f.to_sparse()));
  }
  Dataset train(std::move(vecs), std::move(labels), space.dimension());
  return {std::move(space), std::move(train)};
}

Dataset transform_documents(const FeatureSpace& space,
                            const std::vector<Document>& docs,
                            AccessAudit* audit, AccessAudit::Stage stage) {
  std::vector<SparseVector> rows;
  rows.reserve(docs.size());
  for (const Document& d : docs) {
    touch(audit, d, stage);
    rows.push_back(space.transform(d));
  }
  return Dataset(std::move(rows), doc_labels(docs), space.dimension());
}

namespace {

SeedOutcome run_one_seed(const ExperimentPlan& plan, uint64_t seed,
                         const Corpus& corpus, const Corpus* positive_pool,
                         AccessAudit* audit, const char** stage) {
  *stage = "split";
  const Split split = stratified_split(corpus, plan.ratios, seed);

  *stage = "rebalance";
  std::unordered_set<std::string> held_out = split.dev.ids();
  for (const auto& id : split.test.ids()) held_out.insert(id);
  static const Corpus kEmptyPool{};
  const TrainSet train2 = rebalance_train(
      split.train, positive_pool ? *positive_pool : kEmptyPool,
      plan.target_neg_to_pos, derive_seed(seed, 1), held_out);

  *stage = "features";
  BuiltFeatures built = build_features(
      train2.documents, plan.axis, plan.weighting, plan.min_df,
      plan.stopwords.empty() ? default_stopword_list() : plan.stopwords, audit);

  *stage = "tune";
  Dataset dev_ds = transform_documents(built.space, split.dev.documents, audit,
                                       AccessAudit::Stage::DevTuning);
  TuneOutcome tuned = tune(plan.model, built.train, dev_ds, built.space,
                           plan.grid, derive_seed(seed, 2));

  *stage = "test";
  SeedOutcome out;
  out.seed = seed;
  out.chosen = tuned.chosen;
  out.dev_f1 = tuned.dev_f1;
  for (const Document& d : split.test.documents) {
    touch(audit, d, AccessAudit::Stage::TestEval);
    out.counts.add(d.label, tuned.model.predict(d));
  }
  out.metrics = prf1(out.counts);
  return out;
}

}  // namespace

EvalReport run_experiment(const ExperimentPlan& plan, const Corpus& corpus,
                          const Corpus* positive_pool, AccessAudit* audit) {
  if (plan.seeds.empty()) throw EvalError("experiment plan has no seeds");

  EvalReport report;
  report.axis_label = plan.axis.label();
  report.model = plan.model;

  for (uint64_t seed : plan.seeds) {
    const char* stage = "setup";
    try {
      report.per_seed.push_back(
          run_one_seed(plan, seed, corpus, positive_pool, audit, &stage));
    } catch (const std::exception& e) {
      throw EvalError("seed " + std::to_string(seed) + ", stage " + stage +
                      ", axis " + report.axis_label + ": " + e.what());
    }
  }

  const double n = static_cast<double>(report.per_seed.size());
  for (const SeedOutcome& s : report.per_seed) {
    report.mean.precision += s.metrics.precision / n;
    report.mean.recall += s.metrics.recall / n;
    report.mean.f1 += s.metrics.f1 / n;
  }
  return report;
}

std::vector<EvalReport> sweep(const ExperimentPlan& base, const SweepAxis& axis,
                              const Corpus& corpus, const Corpus* positive_pool) {
  if (axis.values.empty()) {
    throw BadAxisError("sweep axis has no values");
  }
  for (int v : axis.values) {
    if (v <= 0) throw BadAxisError("sweep axis values must be positive");
  }

  std::vector<FeatureAxis> rows;
  switch (axis.kind) {
    case SweepAxis::Kind::Portion:
      for (int x : axis.values) {
        rows.push_back(FeatureAxis::bow_portion(PortionMode::first(x)));
        rows.push_back(FeatureAxis::bow_portion(PortionMode::first_last(x)));
      }
      rows.push_back(FeatureAxis::bow_all());
      break;
    case SweepAxis::Kind::TopNBow:
      for (int n : axis.values) rows.push_back(FeatureAxis::fs_bow(n));
      rows.push_back(FeatureAxis::bow_all());
      break;
    case SweepAxis::Kind::TopNStr:
      for (int n : axis.values) rows.push_back(FeatureAxis::fs_structural(n));
      rows.push_back(FeatureAxis::structural());
      break;
  }

  std::vector<EvalReport> reports;
  reports.reserve(rows.size());
  for (const FeatureAxis& fa : rows) {
    ExperimentPlan plan = base;
    plan.axis = fa;
    reports.push_back(run_experiment(plan, corpus, positive_pool));
  }
  return reports;
}

}  // namespace scopegate
