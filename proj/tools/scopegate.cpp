#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "run_config.hpp"
#include "scopegate/csv.hpp"
#include "scopegate/info_gain.hpp"
#include "scopegate/report.hpp"
#include "scopegate/structural.hpp"

namespace fs = std::filesystem;
using namespace scopegate;
using cli::RunConfig;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEvalFailure = 1;
constexpr int kExitInputError = 2;

void print_fingerprint(const RunConfig& cfg) {
  std::cout << "fingerprint: " << cfg.fingerprint() << '\n';
}

fs::path ensure_out_dir(const RunConfig& cfg) {
  fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  return dir;
}

Corpus load_or_fail(const RunConfig& cfg, bool report_skips = false) {
  LoadResult loaded = load_corpus(cfg.manifest, cfg.text_dir);
  if (report_skips) {
    for (const std::string& id : loaded.skipped_ids) {
      std::cout << "skipped (empty text): " << id << '\n';
    }
  }
  if (loaded.corpus.documents.empty()) {
    throw CorpusError("empty corpus: no loadable documents in " + cfg.manifest);
  }
  return std::move(loaded.corpus);
}

std::optional<Corpus> load_pool(const RunConfig& cfg) {
  if (cfg.pool_manifest.empty()) return std::nullopt;
  LoadResult loaded = load_corpus(cfg.pool_manifest, cfg.text_dir);
  return std::move(loaded.corpus);
}

int cmd_ingest(const RunConfig& cfg) {
  print_fingerprint(cfg);
  LoadResult loaded = load_corpus(cfg.manifest, cfg.text_dir);
  const Corpus& corpus = loaded.corpus;
  if (corpus.documents.empty()) {
    throw CorpusError("empty corpus: no loadable documents in " + cfg.manifest);
  }

  const size_t pos = corpus.count_label(Label::InScope);
  const size_t neg = corpus.count_label(Label::OutOfScope);
  const size_t unl = corpus.count_label(Label::Unlabeled);
  std::cout << "documents: " << corpus.documents.size() << " (in_scope " << pos
            << ", out_of_scope " << neg;
  if (unl) std::cout << ", unlabeled " << unl;
  std::cout << ")\n";
  if (pos + neg > 0) {
    std::cout << "positive fraction: "
              << static_cast<double>(pos) / static_cast<double>(pos + neg)
              << '\n';
  }
  std::cout << "skipped: " << loaded.skipped_ids.size() << '\n';
  for (const std::string& id : loaded.skipped_ids) {
    std::cout << "  " << id << '\n';
  }

  const fs::path out = ensure_out_dir(cfg) / "manifest.csv";
  write_manifest(corpus.documents, out, "fingerprint: " + cfg.fingerprint());
  std::cout << "wrote " << out.string() << '\n';
  return kExitOk;
}

int cmd_split(const RunConfig& cfg) {
  print_fingerprint(cfg);
  const Corpus corpus = load_or_fail(cfg, true);
  const Split split = stratified_split(corpus, cfg.parsed_ratios(), cfg.seed);

  const fs::path dir = ensure_out_dir(cfg);
  const std::string comment = "fingerprint: " + cfg.fingerprint();
  write_manifest(split.train.documents, dir / "train.csv", comment);
  write_manifest(split.dev.documents, dir / "dev.csv", comment);
  write_manifest(split.test.documents, dir / "test.csv", comment);

  const auto describe = [](const char* name, const Corpus& c) {
    std::cout << name << ": " << c.count_label(Label::OutOfScope) << " negative, "
              << c.count_label(Label::InScope) << " positive\n";
  };
  describe("train", split.train);
  describe("dev", split.dev);
  describe("test", split.test);
  std::cout << "wrote " << (dir / "train.csv").string() << ", dev.csv, test.csv\n";
  return kExitOk;
}

int cmd_train(const RunConfig& cfg, const std::string& dev_manifest) {
  print_fingerprint(cfg);
  const Corpus train_corpus = load_or_fail(cfg);

  BuiltFeatures built =
      build_features(train_corpus.documents, cfg.parsed_feature_axis(),
                     cfg.parsed_weighting(), cfg.min_df, cfg.load_stopword_list());

  const std::vector<uint64_t> seeds = cfg.parsed_seeds();
  const uint64_t seed = seeds.front();

  TrainedModel model;
  if (!dev_manifest.empty()) {
    RunConfig dev_cfg = cfg;
    dev_cfg.manifest = dev_manifest;
    const Corpus dev_corpus = load_or_fail(dev_cfg);
    Dataset dev_ds = transform_documents(built.space, dev_corpus.documents);
    TuneOutcome tuned = tune(cfg.parsed_model(), built.train, dev_ds,
                             built.space, cfg.parsed_grid(), seed);
    std::cout << "chosen hyperparams: "
              << tuned.chosen.describe(cfg.parsed_model())
              << " (dev F1 " << tuned.dev_f1 << ")\n";
    model = std::move(tuned.model);
  } else {
    model = train(cfg.parsed_model(), built.train, built.space, Hyperparams{},
                  seed);
  }

  const fs::path out = ensure_out_dir(cfg) / "model.json";
  model.save(out, cfg.fingerprint());
  std::cout << "wrote " << out.string() << '\n';
  return kExitOk;
}

int cmd_evaluate(const RunConfig& cfg) {
  print_fingerprint(cfg);
  const Corpus corpus = load_or_fail(cfg, true);
  const auto pool = load_pool(cfg);

  const ExperimentPlan plan = cfg.make_plan();
  std::vector<EvalReport> reports{
      run_experiment(plan, corpus, pool ? &*pool : nullptr)};

  const fs::path dir = ensure_out_dir(cfg);
  std::ostringstream csv;
  csv << "# fingerprint: " << cfg.fingerprint() << '\n';
  write_report_csv(csv, reports);
  atomic_write(dir / "report.csv", csv.str());

  std::ostringstream summary;
  summary << "# fingerprint: " << cfg.fingerprint() << '\n';
  write_summary_table(summary, reports);
  atomic_write(dir / "summary.txt", summary.str());

  write_summary_table(std::cout, reports);
  std::cout << "wrote " << (dir / "report.csv").string() << ", summary.txt\n";
  return kExitOk;
}

int cmd_rank(const RunConfig& cfg) {
  print_fingerprint(cfg);
  const Corpus corpus = load_or_fail(cfg, true);

  std::vector<int> labels;
  labels.reserve(corpus.documents.size());
  for (const Document& d : corpus.documents) {
    labels.push_back(d.label == Label::InScope ? 1 : 0);
  }

  FeatureRanking ranking;
  if (cfg.features == "bow") {
    const PortionMode portion = cfg.parsed_portion();
    const auto stopword_list = cfg.load_stopword_list();
    const std::unordered_set<std::string> stops(stopword_list.begin(),
                                                stopword_list.end());
    std::vector<TokenStream> prepared;
    prepared.reserve(corpus.documents.size());
    for (const Document& d : corpus.documents) {
      prepared.push_back(preprocess(
          take_portion(tokenize(d.joined_text(), d.id), portion), stops));
    }
    const Vocabulary vocab = Vocabulary::build(prepared, cfg.min_df);
    std::vector<SparseVector> vecs;
    vecs.reserve(prepared.size());
    for (const TokenStream& p : prepared) {
      vecs.push_back(vectorize(p, vocab, cfg.parsed_weighting()));
    }
    ranking = information_gain_presence(vecs, labels, vocab.terms());
  } else {
    std::vector<std::vector<double>> rows;
    rows.reserve(corpus.documents.size());
    for (const Document& d : corpus.documents) {
      const StructuralFeatures f = extract_structural(d);
      rows.emplace_back(f.values.begin(), f.values.end());
    }
    const auto& names = structural_feature_names();
    ranking =
        information_gain_thresholded(rows, labels, {names.begin(), names.end()});
  }

  const fs::path out = ensure_out_dir(cfg) / "ranking.csv";
  std::ostringstream body;
  body << "# fingerprint: " << cfg.fingerprint() << '\n';
  write_ranking_csv(body, ranking);
  atomic_write(out, body.str());
  std::cout << "wrote " << out.string() << " (" << ranking.size()
            << " features)\n";
  return kExitOk;
}

int cmd_predict(const RunConfig& cfg, const std::string& model_file) {
  print_fingerprint(cfg);
  const TrainedModel model = TrainedModel::load(model_file);
  LoadResult loaded = load_corpus(cfg.manifest, cfg.text_dir);

  std::ostringstream body;
  body << "# fingerprint: " << cfg.fingerprint() << '\n';
  body << "id,label,predicted\n";
  for (const Document& d : loaded.corpus.documents) {
    const Label pred = model.predict(d);
    body << join_csv_row({d.id, std::string(label_name(d.label)),
                          std::string(label_name(pred))})
         << '\n';
  }
  const fs::path out = ensure_out_dir(cfg) / "predictions.csv";
  atomic_write(out, body.str());
  std::cout << "wrote " << out.string() << " ("
            << loaded.corpus.documents.size() << " predictions)\n";
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg) {
  print_fingerprint(cfg);
  const Corpus corpus = load_or_fail(cfg, true);
  const auto pool = load_pool(cfg);

  const ExperimentPlan plan = cfg.make_plan();
  const SweepAxis axis = cfg.parsed_sweep_axis();
  const std::vector<EvalReport> reports =
      sweep(plan, axis, corpus, pool ? &*pool : nullptr);

  const fs::path dir = ensure_out_dir(cfg);
  std::ostringstream csv;
  csv << "# fingerprint: " << cfg.fingerprint() << '\n';
  write_report_csv(csv, reports);
  atomic_write(dir / "report.csv", csv.str());

  std::ostringstream summary;
  summary << "# fingerprint: " << cfg.fingerprint() << '\n';
  write_summary_table(summary, reports);
  atomic_write(dir / "summary.txt", summary.str());

  write_summary_table(std::cout, reports);
  std::cout << "wrote " << (dir / "report.csv").string() << ", summary.txt\n";
  return kExitOk;
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--config", "INI config file (flags override it)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--manifest", cfg.manifest, "corpus manifest CSV");
  cmd->add_option("--text-dir", cfg.text_dir, "directory of text files");
  cmd->add_option("--out-dir", cfg.out_dir, "output directory");
  cmd->add_option("--stopwords", cfg.stopwords, "stopword file");
}

void add_feature_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--features", cfg.features, "feature family: bow | str");
  cmd->add_option("--portion", cfg.portion,
                  "document portion: all | first-X | first+last-X");
  cmd->add_option("--weighting", cfg.weighting, "bow weighting: tf | tfidf");
  cmd->add_option("--min-df", cfg.min_df, "vocabulary document-frequency floor");
  cmd->add_option("--top-n", cfg.top_n, "keep top-N features by information gain");
}

void add_model_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--model", cfg.model, "classifier: gnb | mnb | dt | rf | svm");
  cmd->add_option("--svm-c", cfg.svm_c, "SVM C grid (comma separated)");
  cmd->add_option("--rf-trees", cfg.rf_trees, "forest size grid (comma separated)");
}

void add_eval_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--seeds", cfg.seeds, "seed list (comma separated)");
  cmd->add_option("--ratios", cfg.ratios, "train,dev,test fractions");
  cmd->add_option("--target-neg-to-pos", cfg.target_neg_to_pos,
                  "training-set negative:positive target ratio");
  cmd->add_option("--pool-manifest", cfg.pool_manifest,
                  "manifest of supplemental positive documents");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scopegate: classify web-archive documents as in or out of "
               "scope for a collection"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string dev_manifest, model_file;

  // The config file must be applied before the other flags land on top, so
  // scan for it first; CLI11 validates the flag itself later.
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string_view(argv[i]) == "--config") {
      try {
        cfg.apply_file(argv[i + 1]);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
      }
    }
  }
  cfg.apply_env();

  CLI::App* ingest = app.add_subcommand("ingest", "load a corpus and report class balance");
  add_common_options(ingest, cfg);

  CLI::App* split = app.add_subcommand("split", "write stratified train/dev/test manifests");
  add_common_options(split, cfg);
  split->add_option("--ratios", cfg.ratios, "train,dev,test fractions");
  split->add_option("--seed", cfg.seed, "shuffle seed");

  CLI::App* train_cmd = app.add_subcommand("train", "fit a classifier on a training manifest");
  add_common_options(train_cmd, cfg);
  add_feature_options(train_cmd, cfg);
  add_model_options(train_cmd, cfg);
  train_cmd->add_option("--seeds", cfg.seeds, "seed list; the first seeds training");
  train_cmd->add_option("--dev-manifest", dev_manifest,
                        "development manifest for hyperparameter tuning");

  CLI::App* evaluate = app.add_subcommand("evaluate", "run the full seeded protocol and report positive-class metrics");
  add_common_options(evaluate, cfg);
  add_feature_options(evaluate, cfg);
  add_model_options(evaluate, cfg);
  add_eval_options(evaluate, cfg);

  CLI::App* rank = app.add_subcommand("rank", "rank features by information gain");
  add_common_options(rank, cfg);
  add_feature_options(rank, cfg);

  CLI::App* predict = app.add_subcommand("predict", "label documents with a saved model");
  add_common_options(predict, cfg);
  predict->add_option("--model-file", model_file, "trained model JSON")
      ->required();

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "evaluate across a portion or top-N axis");
  add_common_options(sweep_cmd, cfg);
  add_feature_options(sweep_cmd, cfg);
  add_model_options(sweep_cmd, cfg);
  add_eval_options(sweep_cmd, cfg);
  sweep_cmd->add_option("--axis", cfg.axis, "portion | bow-top-n | str-top-n");
  sweep_cmd->add_option("--x-values", cfg.x_values, "portion sizes for the portion axis");
  sweep_cmd->add_option("--n-values", cfg.n_values, "N values for the top-N axes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest) return cmd_ingest(cfg);
    if (*split) return cmd_split(cfg);
    if (*train_cmd) return cmd_train(cfg, dev_manifest);
    if (*evaluate) return cmd_evaluate(cfg);
    if (*rank) return cmd_rank(cfg);
    if (*predict) return cmd_predict(cfg, model_file);
    if (*sweep_cmd) return cmd_sweep(cfg);
  } catch (const CorpusError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    // model/evaluation stage failures
    std::cerr << "error: " << e.what() << '\n';
    return kExitEvalFailure;
  }
  return kExitOk;
}
