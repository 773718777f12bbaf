#include "scopegate/corpus.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "scopegate/csv.hpp"
#include "scopegate/rng.hpp"

namespace scopegate {

namespace {
constexpr std::string_view kManifestHeader = "id,label,text_file,page_count,file_size_kb";
}

std::string_view label_name(Label label) {
  switch (label) {
    case Label::InScope:
      return "in_scope";
    case Label::OutOfScope:
      return "out_of_scope";
    case Label::Unlabeled:
      return "unlabeled";
  }
  return "unlabeled";
}

Label parse_label(std::string_view text) {
  if (text == "in_scope") return Label::InScope;
  if (text == "out_of_scope") return Label::OutOfScope;
  if (text == "unlabeled" || text.empty()) return Label::Unlabeled;
  throw CorpusError("unknown label: '" + std::string(text) +
                    "' (expected in_scope, out_of_scope, or unlabeled)");
}

std::string Document::joined_text() const {
  std::string out;
  for (size_t i = 0; i < pages.size(); ++i) {
    if (i) out += '\f';
    out += pages[i];
  }
  return out;
}

size_t Corpus::count_label(Label label) const {
  return static_cast<size_t>(std::count_if(
      documents.begin(), documents.end(),
      [label](const Document& d) { return d.label == label; }));
}

std::unordered_set<std::string> Corpus::ids() const {
  std::unordered_set<std::string> out;
  out.reserve(documents.size());
  for (const Document& d : documents) out.insert(d.id);
  return out;
}

size_t TrainSet::count_label(Label label) const {
  return static_cast<size_t>(std::count_if(
      documents.begin(), documents.end(),
      [label](const Document& d) { return d.label == label; }));
}

MissingTextFileError::MissingTextFileError(const std::string& id)
    : CorpusError("missing or unreadable text file for document '" + id + "'"),
      id(id) {}

DuplicateIdError::DuplicateIdError(const std::string& id)
    : CorpusError("duplicate document id '" + id + "'"), id(id) {}

MalformedManifestRowError::MalformedManifestRowError(size_t line_no,
                                                     const std::string& detail)
    : CorpusError("manifest line " + std::to_string(line_no) + ": " + detail),
      line_no(line_no) {}

EmptyClassError::EmptyClassError(Label label)
    : CorpusError(std::string("corpus has no ") + std::string(label_name(label)) +
                  " documents") {}

PoolOverlapError::PoolOverlapError(const std::string& id)
    : CorpusError("positive-pool document '" + id +
                  "' also appears in a held-out split"),
      id(id) {}

namespace {

std::vector<std::string> split_pages(const std::string& text) {
  std::vector<std::string> pages;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\f') {
      pages.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  // "page\f" is one page, not a page plus an empty one
  if (pages.size() > 1 && pages.back().empty()) pages.pop_back();
  return pages;
}

}  // namespace

LoadResult load_corpus(const std::filesystem::path& manifest,
                       const std::filesystem::path& text_dir) {
  std::ifstream in(manifest, std::ios::binary);
  if (!in) throw CorpusError("cannot open manifest: " + manifest.string());

  LoadResult result;
  result.corpus.name = manifest.stem().string();

  std::string line;
  size_t line_no = 0;
  bool header_seen = false;
  std::unordered_set<std::string> seen_ids;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kManifestHeader) {
        throw MalformedManifestRowError(
            line_no, "expected header '" + std::string(kManifestHeader) + "'");
      }
      header_seen = true;
      continue;
    }

    std::vector<std::string> fields = split_csv_row(line);
    if (fields.size() != 5) {
      throw MalformedManifestRowError(
          line_no, "expected 5 fields, got " + std::to_string(fields.size()));
    }
    Document doc;
    doc.id = fields[0];
    if (doc.id.empty()) throw MalformedManifestRowError(line_no, "empty id");
    try {
      doc.label = parse_label(fields[1]);
    } catch (const CorpusError& e) {
      throw MalformedManifestRowError(line_no, e.what());
    }
    doc.text_file = fields[2];
    if (doc.text_file.empty()) {
      throw MalformedManifestRowError(line_no, "empty text_file");
    }

    int page_count = 0;
    if (!fields[3].empty()) {
      auto [p, ec] = std::from_chars(fields[3].data(),
                                     fields[3].data() + fields[3].size(), page_count);
      if (ec != std::errc() || p != fields[3].data() + fields[3].size() ||
          page_count <= 0) {
        throw MalformedManifestRowError(line_no,
                                        "bad page_count '" + fields[3] + "'");
      }
    }
    double size_kb = -1.0;
    if (!fields[4].empty()) {
      try {
        size_t pos = 0;
        size_kb = std::stod(fields[4], &pos);
        if (pos != fields[4].size()) throw std::invalid_argument(fields[4]);
      } catch (const std::exception&) {
        throw MalformedManifestRowError(line_no,
                                        "bad file_size_kb '" + fields[4] + "'");
      }
      if (size_kb < 0.0) {
        throw MalformedManifestRowError(line_no, "negative file_size_kb");
      }
    }

    if (!seen_ids.insert(doc.id).second) throw DuplicateIdError(doc.id);

    const std::filesystem::path text_path = text_dir / doc.text_file;
    std::ifstream text_in(text_path, std::ios::binary);
    if (!text_in) throw MissingTextFileError(doc.id);
    std::ostringstream buf;
    buf << text_in.rdbuf();
    std::string text = buf.str();

    if (text.empty()) {
      result.skipped_ids.push_back(doc.id);
      continue;
    }

    doc.pages = split_pages(text);
    doc.page_count = page_count > 0 ? page_count : static_cast<int>(doc.pages.size());
    doc.file_size_kb =
        size_kb >= 0.0 ? size_kb : static_cast<double>(text.size()) / 1024.0;
    result.corpus.documents.push_back(std::move(doc));
  }
  return result;
}

void write_manifest(const std::vector<Document>& documents,
                    const std::filesystem::path& path,
                    std::string_view comment) {
  std::string content;
  if (!comment.empty()) {
    content += "# ";
    content += comment;
    content += '\n';
  }
  content += kManifestHeader;
  content += '\n';
  for (const Document& d : documents) {
    content += join_csv_row({d.id, std::string(label_name(d.label)), d.text_file,
                             std::to_string(d.page_count),
                             format_double(d.file_size_kb)});
    content += '\n';
  }
  atomic_write(path, content);
}

namespace {

// Largest-remainder allocation of n items to the three parts. Ties on the
// fractional part resolve toward the earlier part (train first).
std::array<size_t, 3> allocate_counts(size_t n, const SplitRatios& ratios) {
  const std::array<double, 3> r{ratios.train, ratios.dev, ratios.test};
  std::array<size_t, 3> counts{};
  std::array<double, 3> frac{};
  size_t assigned = 0;
  for (int i = 0; i < 3; ++i) {
    double exact = r[i] * static_cast<double>(n);
    counts[i] = static_cast<size_t>(std::floor(exact));
    frac[i] = exact - std::floor(exact);
    assigned += counts[i];
  }
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return frac[a] > frac[b]; });
  for (size_t k = 0; assigned < n; ++k) {
    counts[order[k % 3]] += 1;
    ++assigned;
  }
  return counts;
}

}  // namespace

Split stratified_split(const Corpus& corpus, const SplitRatios& ratios,
                       uint64_t seed) {
  if (ratios.train < 0 || ratios.dev < 0 || ratios.test < 0 ||
      std::abs(ratios.train + ratios.dev + ratios.test - 1.0) > 1e-9) {
    throw BadRatiosError("split ratios must be non-negative and sum to 1");
  }
  std::vector<size_t> neg_idx, pos_idx;
  for (size_t i = 0; i < corpus.documents.size(); ++i) {
    switch (corpus.documents[i].label) {
      case Label::OutOfScope:
        neg_idx.push_back(i);
        break;
      case Label::InScope:
        pos_idx.push_back(i);
        break;
      case Label::Unlabeled:
        throw CorpusError("cannot split a corpus with unlabeled document '" +
                          corpus.documents[i].id + "'");
    }
  }
  if (neg_idx.empty()) throw EmptyClassError(Label::OutOfScope);
  if (pos_idx.empty()) throw EmptyClassError(Label::InScope);

  SplitMix64 rng(seed);
  shuffle(neg_idx, rng);
  shuffle(pos_idx, rng);

  Split split;
  split.seed = seed;
  split.train.name = corpus.name + "-train";
  split.dev.name = corpus.name + "-dev";
  split.test.name = corpus.name + "-test";

  const auto assign = [&](const std::vector<size_t>& idx) {
    const auto counts = allocate_counts(idx.size(), ratios);
    size_t at = 0;
    for (size_t k = 0; k < counts[0]; ++k)
      split.train.documents.push_back(corpus.documents[idx[at++]]);
    for (size_t k = 0; k < counts[1]; ++k)
      split.dev.documents.push_back(corpus.documents[idx[at++]]);
    for (size_t k = 0; k < counts[2]; ++k)
      split.test.documents.push_back(corpus.documents[idx[at++]]);
  };
  assign(neg_idx);
  assign(pos_idx);
  return split;
}

TrainSet rebalance_train(const Corpus& train, const Corpus& positive_pool,
                         double target_neg_to_pos, uint64_t seed,
                         const std::unordered_set<std::string>& held_out_ids) {
  if (target_neg_to_pos <= 0.0) {
    throw CorpusError("target negative:positive ratio must be positive");
  }
  for (const Document& d : positive_pool.documents) {
    if (d.label != Label::InScope) {
      throw CorpusError("positive pool contains non-positive document '" +
                        d.id + "'");
    }
    if (held_out_ids.contains(d.id)) throw PoolOverlapError(d.id);
  }

  TrainSet out;
  out.documents = train.documents;

  const size_t neg = train.count_label(Label::OutOfScope);
  const size_t pos = train.count_label(Label::InScope);
  const size_t target_pos =
      static_cast<size_t>(std::floor(static_cast<double>(neg) / target_neg_to_pos));

  SplitMix64 rng(seed);
  size_t have = pos;
  if (target_pos > have) {
    size_t needed = target_pos - have;

    // Fresh pool documents first, shuffled, skipping ids already in train.
    const auto train_ids = train.ids();
    std::vector<size_t> pool_idx;
    for (size_t i = 0; i < positive_pool.documents.size(); ++i) {
      if (!train_ids.contains(positive_pool.documents[i].id)) pool_idx.push_back(i);
    }
    shuffle(pool_idx, rng);
    const size_t from_pool = std::min(needed, pool_idx.size());
    for (size_t k = 0; k < from_pool; ++k) {
      out.documents.push_back(positive_pool.documents[pool_idx[k]]);
    }
    needed -= from_pool;
    have += from_pool;

    if (needed > 0) {
      // Pool exhausted: oversample with replacement from every positive we
      // have (train positives plus the whole usable pool).
      std::vector<const Document*> source;
      for (const Document& d : train.documents) {
        if (d.label == Label::InScope) source.push_back(&d);
      }
      for (size_t i : pool_idx) source.push_back(&positive_pool.documents[i]);
      if (source.empty()) {
        throw EmptyClassError(Label::InScope);
      }
      for (size_t k = 0; k < needed; ++k) {
        out.documents.push_back(*source[rng.next_below(source.size())]);
      }
      have += needed;
    }
  }

  out.neg_to_pos_ratio =
      have == 0 ? 0.0 : static_cast<double>(neg) / static_cast<double>(have);
  return out;
}

}  // namespace scopegate
