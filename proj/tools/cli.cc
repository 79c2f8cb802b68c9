// Copyright 2026 The alalc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "CLI11.hpp"
#include "alalc/chartrans.h"
#include "alalc/combiner.h"
#include "alalc/corpus.h"
#include "alalc/error.h"
#include "alalc/eval.h"
#include "alalc/marc.h"
#include "alalc/mle.h"
#include "alalc/morphtrans.h"
#include "alalc/parallel.h"
#include "alalc/rule_table.h"
#include "alalc/unicode.h"
#include "json.hpp"
#include "output.h"
#include "version.h"

namespace alalc::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

struct Global {
  std::string data_dir;
  unsigned jobs = 1;
};

struct ModelPaths {
  std::string rules;
  std::string model;
  std::string annotations;
  std::string lexicon;
  std::string gazetteer;
};

fs::path data_path(const Global& g, const std::string& explicit_path,
                   const char* relative) {
  if (!explicit_path.empty()) return explicit_path;
  return fs::path(g.data_dir) / relative;
}

std::string quote(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += (c == '\n' || c == '\t') ? ' ' : c;
  }
  return out;
}

// Options actually given (or defaulted) on a subcommand, for the manifest.
json config_echo(const CLI::App& app, const Global& g) {
  json config;
  for (const CLI::Option* opt : app.get_options()) {
    if (opt->get_lnames().empty()) continue;
    const std::string name = opt->get_lnames().front();
    if (name == "help") continue;
    if (opt->count() > 0) {
      const auto& results = opt->results();
      if (results.size() == 1 && opt->get_type_size() != 0 && opt->get_items_expected_max() <= 1) {
        config[name] = results.front();
      } else if (opt->get_type_size() == 0) {
        config[name] = true;
      } else {
        config[name] = results;
      }
    } else if (!opt->get_default_str().empty()) {
      config[name] = opt->get_default_str();
    }
  }
  config["jobs"] = g.jobs;
  return config;
}

std::vector<BibRecord> read_corpora(const std::vector<std::string>& paths) {
  std::vector<BibRecord> records;
  for (const std::string& p : paths) {
    std::vector<BibRecord> part = read_corpus(p);
    std::move(part.begin(), part.end(), std::back_inserter(records));
  }
  return records;
}

std::vector<Entry> read_entries(const std::vector<std::string>& paths) {
  const std::vector<BibRecord> records = read_corpora(paths);
  return flatten_entries(records);
}

void write_corpus_file(const fs::path& path, std::span<const BibRecord> records) {
  AtomicOutput out(path);
  write_corpus(out.stream(), records);
  out.commit();
}

std::string stats_line(std::string_view name, const CorpusStats& s) {
  std::ostringstream out;
  out << name << ".records=" << s.records << '\n'
      << name << ".entries=" << s.entries << '\n'
      << name << ".tokens=" << s.tokens << '\n'
      << name << ".words=" << s.words << '\n';
  return out.str();
}

json stats_json(const CorpusStats& s) {
  return {{"records", s.records}, {"entries", s.entries}, {"tokens", s.tokens},
          {"words", s.words}};
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Owns everything a backoff chain borrows.
class Chain {
 public:
  Chain(const std::vector<std::string>& names, const ModelPaths& paths, const Global& g) {
    if (names.empty()) throw ValidationError("empty --chain");
    table_ = load_rule_table(data_path(g, paths.rules, "rules/alalc_arabic.rules"));
    inputs_.push_back(data_path(g, paths.rules, "rules/alalc_arabic.rules"));
    for (const std::string& raw : names) {
      const std::string name = raw == "chartrans" ? "char" : raw == "morphtrans" ? "morph" : raw;
      if (name == "mle") {
        if (paths.model.empty()) throw ValidationError("chain uses mle but no --model given");
        model_ = std::make_unique<MleModel>(MleModel::Load(paths.model));
        inputs_.push_back(paths.model);
        techniques_.push_back(std::make_unique<MleTechnique>(*model_));
      } else if (name == "morph") {
        if (!paths.annotations.empty()) {
          adapter_ = std::make_unique<AnnotationFileAdapter>(
              AnnotationFileAdapter::Load(paths.annotations));
          inputs_.push_back(paths.annotations);
        } else {
          const fs::path lex = data_path(g, paths.lexicon, "lexicon/lexicon.txt");
          const fs::path gaz = data_path(g, paths.gazetteer, "lexicon/gazetteer.txt");
          adapter_ = std::make_unique<NaiveAnalyzer>(NaiveAnalyzer::Load(lex, gaz));
          inputs_.push_back(lex);
          inputs_.push_back(gaz);
        }
        techniques_.push_back(std::make_unique<MorphTransTechnique>(*adapter_, table_));
      } else if (name == "char") {
        techniques_.push_back(std::make_unique<CharTransTechnique>(table_));
      } else {
        throw ValidationError("unknown technique '" + raw + "' (expected mle, morph, char)");
      }
    }
    if (!techniques_.back()->total()) {
      throw ValidationError("chain must end with char");
    }
    for (const auto& t : techniques_) chain_.push_back(t.get());
  }

  std::span<const Technique* const> techniques() const { return chain_; }
  const RuleTable& table() const { return table_; }
  const std::vector<fs::path>& inputs() const { return inputs_; }
  std::string describe() const {
    std::string out;
    for (const Technique* t : chain_) {
      if (!out.empty()) out += ',';
      out += t->name();
    }
    return out;
  }

 private:
  RuleTable table_;
  std::unique_ptr<MleModel> model_;
  std::unique_ptr<AnalyzerAdapter> adapter_;
  std::vector<std::unique_ptr<Technique>> techniques_;
  std::vector<const Technique*> chain_;
  std::vector<fs::path> inputs_;
};

struct Romanized {
  std::vector<std::vector<RomanToken>> tokens;
  Diagnostics diag;
};

Romanized romanize_all(std::span<const Entry> entries, const Chain& chain,
                       const BackoffOptions& options, unsigned jobs) {
  struct One {
    std::vector<RomanToken> tokens;
    Diagnostics diag;
  };
  std::vector<One> parts = parallel_map(entries.size(), jobs, [&](std::size_t i) {
    One one;
    one.tokens = romanize_entry_backoff(entries[i], chain.techniques(), options, &one.diag);
    return one;
  });
  Romanized out;
  out.tokens.reserve(parts.size());
  for (One& p : parts) {
    out.diag.merge(p.diag);
    out.tokens.push_back(std::move(p.tokens));
  }
  return out;
}

void print_diagnostics(std::ostream& out, const Diagnostics& d) {
  out << "unmapped_codepoints=" << d.unmapped_total() << '\n';
  for (const auto& [c, n] : d.unmapped) out << "unmapped." << codepoint_name(c) << '=' << n << '\n';
  out << "morph_backoffs=" << d.morph_backoffs << '\n';
}

std::map<std::string, std::vector<RomanToken>> read_prediction_tokens(
    const fs::path& path, std::span<const Entry> entries) {
  std::unordered_set<std::string> ids;
  for (const Entry& e : entries) ids.insert(e.id);
  const std::vector<Prediction> preds = read_predictions(path);
  auto map = ingest_predictions(preds, ids);
  for (const Prediction& p : preds) {
    if (!p.provenances) continue;
    std::vector<RomanToken>& tokens = map[p.entry_id];
    if (p.provenances->size() != tokens.size()) continue;
    for (std::size_t i = 0; i < tokens.size(); ++i) tokens[i].provenance = (*p.provenances)[i];
  }
  return map;
}

std::string percent_row(const std::string& label, std::size_t words, const EvalReport& r) {
  std::ostringstream out;
  out << label << '\t' << words << '\t' << format_percent(r.all.exact, r.all.total) << '\t'
      << format_percent(r.all.ci, r.all.total) << '\t' << format_percent(r.all.cpi, r.all.total)
      << '\t' << format_percent(r.words.exact, r.words.total) << '\t'
      << format_percent(r.words.ci, r.words.total) << '\t'
      << format_percent(r.words.cpi, r.words.total);
  return out.str();
}

// ---- commands -------------------------------------------------------------

struct ExtractOptions {
  std::vector<std::string> inputs;
  std::string output;
  std::string language = "ara";
  std::string safe_tags;
  bool all_tags = false;
};

void cmd_extract(const ExtractOptions& o, const Global& g, const CLI::App& app,
                 std::ostream& out) {
  struct Parsed {
    std::vector<BibRecord> records;
    MarcStats stats;
  };
  std::vector<Parsed> parts = parallel_map(o.inputs.size(), g.jobs, [&](std::size_t i) {
    Parsed p;
    p.records = parse_marc_file(o.inputs[i], &p.stats);
    return p;
  });
  MarcStats marc;
  std::vector<BibRecord> records;
  for (Parsed& p : parts) {
    marc.merge(p.stats);
    std::move(p.records.begin(), p.records.end(), std::back_inserter(records));
  }
  const std::size_t parsed = records.size();
  records = select_language(std::move(records), o.language);
  const std::size_t in_language = records.size();
  FilterStats filter;
  fs::path tags_path;
  if (!o.all_tags) {
    tags_path = data_path(g, o.safe_tags, "corpus/safe_tags.txt");
    records = filter_entries(std::move(records), SafeTagList::Load(tags_path), &filter);
  }
  write_corpus_file(o.output, records);

  Manifest manifest("extract", config_echo(app, g));
  for (const std::string& in : o.inputs) manifest.add_input(in);
  if (!tags_path.empty()) manifest.add_input(tags_path);
  manifest.set("stats", {{"records_seen", marc.records_seen},
                         {"records_without_008", marc.records_without_008},
                         {"records_parsed", parsed},
                         {"records_in_language", in_language},
                         {"unlinked_880", marc.unlinked_880},
                         {"entries_in", filter.entries_in},
                         {"entries_kept", filter.entries_kept},
                         {"output", stats_json(corpus_stats(records))}});
  manifest.write_for(o.output);

  out << "records_seen=" << marc.records_seen << '\n'
      << "records_without_008=" << marc.records_without_008 << '\n'
      << "records_parsed=" << parsed << '\n'
      << "records_in_language=" << in_language << '\n'
      << "fields_880=" << marc.fields_880 << '\n'
      << "unlinked_880=" << marc.unlinked_880 << '\n';
  if (!o.all_tags) {
    out << "entries_in=" << filter.entries_in << '\n'
        << "entries_kept=" << filter.entries_kept << '\n';
  }
  out << stats_line("output", corpus_stats(records));
}

struct CleanOptions {
  std::vector<std::string> inputs;
  std::string output;
  bool keep_mismatched = false;
  std::string log;
};

void cmd_clean(const CleanOptions& o, const Global& g, const CLI::App& app, std::ostream& out) {
  std::vector<BibRecord> records = read_corpora(o.inputs);
  const CorpusStats before = corpus_stats(records);
  std::vector<CleanLog> logs = parallel_map(records.size(), g.jobs, [&](std::size_t i) {
    std::vector<BibRecord> one{records[i]};
    CleanLog log;
    clean_records(one, &log);
    records[i] = std::move(one.front());
    return log;
  });
  CleanLog log;
  for (const CleanLog& l : logs) log.merge(l);
  MismatchStats mismatch;
  if (!o.keep_mismatched) records = drop_mismatched(std::move(records), &mismatch);
  write_corpus_file(o.output, records);
  if (!o.log.empty()) {
    AtomicOutput log_out(o.log);
    for (const std::string& m : log.messages) log_out.stream() << m << '\n';
    log_out.commit();
  }
  const CorpusStats after = corpus_stats(records);
  Manifest manifest("clean", config_echo(app, g));
  for (const std::string& in : o.inputs) manifest.add_input(in);
  manifest.set("stats", {{"input", stats_json(before)},
                         {"output", stats_json(after)},
                         {"conjunctions_merged", log.conjunctions_merged},
                         {"bidi_resyncs", log.bidi_resyncs},
                         {"entries_dropped_mismatch", mismatch.dropped},
                         {"records_dropped", mismatch.records_dropped}});
  manifest.write_for(o.output);

  out << "whitespace_fixes=" << log.whitespace_fixes << '\n'
      << "punctuation_mapped=" << log.punctuation_mapped << '\n'
      << "punctuation_attached=" << log.punctuation_attached << '\n'
      << "bidi_resyncs=" << log.bidi_resyncs << '\n'
      << "conjunctions_merged=" << log.conjunctions_merged << '\n'
      << "entries_dropped_mismatch=" << mismatch.dropped << '\n'
      << "mismatch_removal_pct=" << format_percent(mismatch.dropped, mismatch.entries_in) << '\n'
      << "records_dropped=" << mismatch.records_dropped << '\n'
      << stats_line("output", after);
}

struct SplitOptions {
  std::vector<std::string> inputs;
  std::string out_dir;
  std::string ratios = "80/10/10";
  std::uint64_t seed = 0;
  bool stratify = false;
};

void cmd_split(const SplitOptions& o, const Global& g, const CLI::App& app, std::ostream& out) {
  SplitSpec spec = SplitSpec::Parse(o.ratios, o.seed);
  spec.stratify_by_source = o.stratify;
  SplitResult result = split_records(read_corpora(o.inputs), spec);
  const fs::path dir(o.out_dir);
  const std::array<std::pair<const char*, std::vector<BibRecord>*>, 3> parts = {{
      {"train", &result.train}, {"dev", &result.dev}, {"test", &result.test}}};
  json stats;
  for (const auto& [name, records] : parts) {
    const fs::path path = dir / (std::string(name) + ".tsv");
    write_corpus_file(path, *records);
    const CorpusStats s = corpus_stats(*records);
    stats[name] = stats_json(s);
    out << stats_line(name, s);
  }
  for (const auto& [name, records] : parts) {
    Manifest manifest("split", config_echo(app, g));
    for (const std::string& in : o.inputs) manifest.add_input(in);
    manifest.set("part", name);
    manifest.set("stats", stats);
    manifest.write_for(dir / (std::string(name) + ".tsv"));
  }
}

struct TrainOptions {
  std::vector<std::string> inputs;
  std::string output;
  std::uint32_t fraction = 1;
  std::uint64_t seed = 0;
};

void cmd_train(const TrainOptions& o, const Global& g, const CLI::App& app, std::ostream& out) {
  std::vector<BibRecord> records = read_corpora(o.inputs);
  if (o.fraction > 1) records = subsample(records, o.fraction, o.seed);
  const std::vector<Entry> entries = drop_mismatched(flatten_entries(records));
  // Count per worker, merged in a fixed order; the sum is order-independent.
  const std::size_t shards = std::max<std::size_t>(1, std::min<std::size_t>(g.jobs, entries.size()));
  std::vector<MleCounts> counts = parallel_map(shards, g.jobs, [&](std::size_t s) {
    MleCounts c(o.fraction);
    for (std::size_t i = s; i < entries.size(); i += shards) c.add_entry(entries[i]);
    return c;
  });
  MleCounts total(o.fraction);
  for (const MleCounts& c : counts) total.merge(c);
  const MleModel model(total);
  AtomicOutput file(o.output);
  model.Write(file.stream());
  file.commit();
  Manifest manifest("train-mle", config_echo(app, g));
  for (const std::string& in : o.inputs) manifest.add_input(in);
  manifest.set("stats", {{"records", records.size()},
                         {"entries", entries.size()},
                         {"trained_words", model.trained_words()},
                         {"keys", model.size()}});
  manifest.write_for(o.output);
  out << "records=" << records.size() << '\n'
      << "entries=" << entries.size() << '\n'
      << "trained_words=" << model.trained_words() << '\n'
      << "keys=" << model.size() << '\n';
}

struct RomanizeOptions {
  std::vector<std::string> inputs;
  std::string output;
  std::string chain = "mle,morph,char";
  ModelPaths paths;
  bool no_entry_caps = false;
};

void cmd_romanize(const RomanizeOptions& o, const Global& g, const CLI::App& app,
                  std::ostream& out) {
  const Chain chain(split_list(o.chain), o.paths, g);
  const std::vector<Entry> entries = read_entries(o.inputs);
  BackoffOptions options;
  options.entry_initial_caps = !o.no_entry_caps;
  const Romanized result = romanize_all(entries, chain, options, g.jobs);

  AtomicOutput file(o.output);
  std::map<std::string, std::size_t> by_provenance;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    file.stream() << format_prediction(entries[i].id, result.tokens[i], entries[i].layout) << '\n';
    for (const RomanToken& t : result.tokens[i]) ++by_provenance[std::string(to_string(t.provenance))];
  }
  file.commit();

  Manifest manifest("romanize", config_echo(app, g));
  for (const std::string& in : o.inputs) manifest.add_input(in);
  for (const fs::path& p : chain.inputs()) manifest.add_input(p);
  manifest.set("rule_table", chain.table().version());
  manifest.set("chain", chain.describe());
  manifest.set("provenance", by_provenance);
  manifest.write_for(o.output);

  out << "entries=" << entries.size() << '\n' << "chain=" << chain.describe() << '\n';
  for (const auto& [p, n] : by_provenance) out << "provenance." << p << '=' << n << '\n';
  print_diagnostics(out, result.diag);
}

struct CombineOptions {
  std::vector<std::string> inputs;
  std::string hypothesis;
  std::string backoff;
  std::string chain = "morph,char";
  std::string output;
  ModelPaths paths;
  bool constant_gap = false;
};

void cmd_combine(const CombineOptions& o, const Global& g, const CLI::App& app,
                 std::ostream& out) {
  const std::vector<Entry> entries = read_entries(o.inputs);
  const auto hyps = read_prediction_tokens(o.hypothesis, entries);

  std::vector<std::vector<RomanToken>> backoff;
  std::optional<Chain> chain;
  if (!o.backoff.empty()) {
    const auto given = read_prediction_tokens(o.backoff, entries);
    for (const Entry& e : entries) {
      auto it = given.find(e.id);
      if (it == given.end()) throw ValidationError("backoff file lacks entry " + e.id);
      if (it->second.size() != e.tokens.size()) {
        throw StructuralError("backoff for " + e.id + " has " + std::to_string(it->second.size()) +
                              " tokens for " + std::to_string(e.tokens.size()) + " source tokens");
      }
      backoff.push_back(it->second);
    }
  } else {
    chain.emplace(split_list(o.chain), o.paths, g);
    backoff = romanize_all(entries, *chain, {}, g.jobs).tokens;
  }

  AlignOptions align_options;
  if (o.constant_gap) align_options.gap_cost = AlignOptions::GapCost::kConstant;
  struct Combined {
    std::vector<RomanToken> tokens;
    std::size_t dropped = 0;
    std::size_t extra = 0;
  };
  std::vector<Combined> combined = parallel_map(entries.size(), g.jobs, [&](std::size_t i) {
    Combined c;
    auto it = hyps.find(entries[i].id);
    const std::vector<RomanToken> none;
    const std::vector<RomanToken>& hyp = it == hyps.end() ? none : it->second;
    const AlignmentResult a = align(hyp, backoff[i], align_options);
    c.dropped = a.dropped_sources;
    c.extra = a.extra_hypotheses;
    c.tokens = combine(hyp, backoff[i], align_options);
    return c;
  });

  AtomicOutput file(o.output);
  std::size_t dropped = 0;
  std::size_t extra = 0;
  std::size_t missing = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    file.stream() << format_prediction(entries[i].id, combined[i].tokens, entries[i].layout) << '\n';
    dropped += combined[i].dropped;
    extra += combined[i].extra;
    if (!hyps.contains(entries[i].id)) ++missing;
  }
  file.commit();

  Manifest manifest("combine", config_echo(app, g));
  for (const std::string& in : o.inputs) manifest.add_input(in);
  manifest.add_input(o.hypothesis);
  if (!o.backoff.empty()) manifest.add_input(o.backoff);
  if (chain) {
    for (const fs::path& p : chain->inputs()) manifest.add_input(p);
    manifest.set("chain", chain->describe());
  }
  manifest.set("stats", {{"entries", entries.size()},
                         {"missing_entries", missing},
                         {"gapfilled_tokens", dropped},
                         {"discarded_hypotheses", extra}});
  manifest.write_for(o.output);
  out << "entries=" << entries.size() << '\n'
      << "missing_entries=" << missing << '\n'
      << "gapfilled_tokens=" << dropped << '\n'
      << "discarded_hypotheses=" << extra << '\n';
}

struct EvaluateOptions {
  std::string predictions;
  std::vector<std::string> references;
  bool lenient = false;
  std::string format = "both";
  std::string output;
  bool no_punctuation = false;
};

void cmd_evaluate(const EvaluateOptions& o, const Global& g, const CLI::App& app,
                  std::ostream& out) {
  const std::vector<Entry> refs = read_entries(o.references);
  const auto preds = read_prediction_tokens(o.predictions, refs);
  const Matcher matcher(o.no_punctuation ? PunctuationSet::Empty() : PunctuationSet::Default());
  EvalOptions options;
  options.lenient = o.lenient;
  const EvalReport report = evaluate(refs, preds, matcher, options);
  std::string text;
  if (o.format == "text" || o.format == "both") text += report.format_table();
  if (o.format == "kv" || o.format == "both") text += report.format_kv();
  out << text;
  if (!o.output.empty()) {
    AtomicOutput file(o.output);
    file.stream() << text;
    file.commit();
    Manifest manifest("evaluate", config_echo(app, g));
    manifest.add_input(o.predictions);
    for (const std::string& r : o.references) manifest.add_input(r);
    manifest.write_for(o.output);
  }
}

struct AblateOptions {
  std::vector<std::string> train;
  std::vector<std::string> dev;
  std::string fractions = "2,4,8,16,32,64";
  std::uint64_t seed = 0;
  std::string chain = "mle,char";
  ModelPaths paths;
  std::string output;
};

void cmd_ablate(const AblateOptions& o, const Global& g, const CLI::App& app, std::ostream& out) {
  const std::vector<BibRecord> train = read_corpora(o.train);
  const std::vector<Entry> dev = read_entries(o.dev);
  std::vector<std::uint32_t> denominators{1};
  for (const std::string& f : split_list(o.fractions)) {
    const long d = std::stol(f);
    if (d < 2) throw ValidationError("fractions are denominators >= 2, got " + f);
    denominators.push_back(static_cast<std::uint32_t>(d));
  }
  const std::vector<std::string> names = split_list(o.chain);
  const bool uses_mle = std::find(names.begin(), names.end(), "mle") != names.end();
  if (!uses_mle) throw ValidationError("ablate needs a chain containing mle");

  const fs::path scratch = fs::temp_directory_path() /
                           ("alalc-ablate-" + std::to_string(std::hash<std::string>{}(o.output)));
  fs::create_directories(scratch);
  std::vector<std::string> rows;
  rows.push_back("fraction\ttrain_words\texact\tci\tcpi\twords_exact\twords_ci\twords_cpi");
  for (std::uint32_t d : denominators) {
    const std::vector<BibRecord> sample = d == 1 ? train : subsample(train, d, o.seed);
    const MleModel model = train_mle(drop_mismatched(flatten_entries(sample)), d);
    const fs::path model_path = scratch / ("mle_" + std::to_string(d) + ".tsv");
    model.Save(model_path);
    ModelPaths paths = o.paths;
    paths.model = model_path.string();
    const Chain chain(names, paths, g);
    const Romanized r = romanize_all(dev, chain, {}, g.jobs);
    std::map<std::string, std::vector<RomanToken>> preds;
    for (std::size_t i = 0; i < dev.size(); ++i) preds[dev[i].id] = r.tokens[i];
    const EvalReport report = evaluate(dev, preds);
    rows.push_back(percent_row(d == 1 ? "1" : "1/" + std::to_string(d), model.trained_words(),
                               report));
  }
  fs::remove_all(scratch);
  // Largest training set last, matching the usual table order.
  std::rotate(rows.begin() + 1, rows.begin() + 2, rows.end());
  std::reverse(rows.begin() + 1, rows.end() - 1);
  std::string text;
  for (const std::string& row : rows) text += row + '\n';
  out << text;
  if (!o.output.empty()) {
    AtomicOutput file(o.output);
    file.stream() << text;
    file.commit();
    Manifest manifest("ablate", config_echo(app, g));
    for (const std::string& t : o.train) manifest.add_input(t);
    for (const std::string& d : o.dev) manifest.add_input(d);
    manifest.write_for(o.output);
  }
}

struct ErrorSampleOptions {
  std::string predictions;
  std::vector<std::string> references;
  std::size_t n = 100;
  std::uint64_t seed = 0;
  std::string output;
};

void cmd_error_sample(const ErrorSampleOptions& o, const Global& g, const CLI::App& app,
                      std::ostream& out) {
  const std::vector<Entry> refs = read_entries(o.references);
  const auto preds = read_prediction_tokens(o.predictions, refs);
  const std::vector<ErrorSample> sample = sample_errors(refs, preds, o.n, o.seed);
  std::ostringstream text;
  text << "entry_id\ttoken\tsource\tprediction\ttarget\tsuggested\tside\tkind\n";
  for (const ErrorSample& s : sample) {
    text << s.entry_id << '\t' << s.token_index << '\t' << s.source << '\t' << s.prediction
         << '\t' << s.target << '\t' << to_string(s.suggestion) << "\t\t\n";
  }
  if (o.output.empty()) {
    out << text.str();
  } else {
    AtomicOutput file(o.output);
    file.stream() << text.str();
    file.commit();
    Manifest manifest("error-sample", config_echo(app, g));
    manifest.add_input(o.predictions);
    for (const std::string& r : o.references) manifest.add_input(r);
    manifest.write_for(o.output);
    out << "samples=" << sample.size() << '\n';
  }
}

void cmd_version(bool as_json, const std::string& rules, const Global& g, std::ostream& out) {
  const fs::path rules_path = data_path(g, rules, "rules/alalc_arabic.rules");
  std::string table = "none";
  try {
    if (fs::exists(rules_path)) table = load_rule_table(rules_path).version();
  } catch (const Error&) {
    table = "none";
  }
  if (as_json) {
    json doc = {{"tool", "alalc"},
                {"version", kVersion},
                {"table", table},
                {"data_dir", g.data_dir},
                {"rules", rules_path.string()},
                {"lexicon", (fs::path(g.data_dir) / "lexicon/lexicon.txt").string()},
                {"gazetteer", (fs::path(g.data_dir) / "lexicon/gazetteer.txt").string()},
                {"safe_tags", (fs::path(g.data_dir) / "corpus/safe_tags.txt").string()}};
    out << doc.dump() << '\n';
  } else {
    out << "alalc " << kVersion << '\n'
        << "table: " << table << '\n'
        << "data_dir: " << g.data_dir << '\n'
        << "rules: " << rules_path.string() << '\n';
  }
}

void add_model_options(CLI::App* sub, ModelPaths& p) {
  sub->add_option("--rules", p.rules, "Rule table (default: <data-dir>/rules/alalc_arabic.rules)");
  sub->add_option("--model", p.model, "MLE model file");
  sub->add_option("--annotations", p.annotations, "Morphological annotation TSV for morph");
  sub->add_option("--lexicon", p.lexicon, "Lexicon for the built-in analyzer");
  sub->add_option("--gazetteer", p.gazetteer, "Gazetteer for the built-in analyzer");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Global g;
  if (const char* env = std::getenv("ALALC_DATA_DIR"); env != nullptr && *env != '\0') {
    g.data_dir = env;
  } else {
    g.data_dir = kDefaultDataDir;
  }

  CLI::App app("Romanize undiacritized Arabic catalogue entries into ALA-LC.", "alalc");
  app.set_config("--config", "", "Read options from a key=value config file");
  app.add_option("--data-dir", g.data_dir, "Directory with rules/, lexicon/ and corpus/");
  app.add_option("-j,--jobs", g.jobs, "Worker threads (0 = all cores)")->capture_default_str();
  app.require_subcommand(1);
  app.fallthrough();

  ExtractOptions ex;
  auto* extract = app.add_subcommand("extract", "MARC-XML to corpus TSV (language and safe-tag filter)");
  extract->add_option("--in", ex.inputs, "MARC-XML files")->required()->check(CLI::ExistingFile);
  extract->add_option("--out", ex.output, "Output corpus TSV")->required();
  extract->add_option("--language", ex.language, "008 language code")->capture_default_str();
  extract->add_option("--safe-tags", ex.safe_tags, "Safe tag list");
  extract->add_flag("--all-tags", ex.all_tags, "Keep every linked field");

  CleanOptions cl;
  auto* clean = app.add_subcommand("clean", "Fix punctuation and conjunction splits, drop mismatches");
  clean->add_option("--in", cl.inputs, "Corpus TSV files")->required()->check(CLI::ExistingFile);
  clean->add_option("--out", cl.output, "Output corpus TSV")->required();
  clean->add_flag("--keep-mismatched", cl.keep_mismatched, "Keep entries with unequal token counts");
  clean->add_option("--log", cl.log, "Write the transformation log here");

  SplitOptions sp;
  auto* split = app.add_subcommand("split", "Record-level train/dev/test split");
  split->add_option("--in", sp.inputs, "Corpus TSV files")->required()->check(CLI::ExistingFile);
  split->add_option("--out-dir", sp.out_dir, "Directory for train.tsv, dev.tsv, test.tsv")->required();
  split->add_option("--ratios", sp.ratios, "Split ratios")->capture_default_str();
  split->add_option("--seed", sp.seed, "Shuffle seed")->capture_default_str();
  split->add_flag("--stratify", sp.stratify, "Split each input file separately");

  TrainOptions tr;
  auto* train = app.add_subcommand("train-mle", "Train the MLE token map");
  train->add_option("--in", tr.inputs, "Training corpus TSV")->required()->check(CLI::ExistingFile);
  train->add_option("--out", tr.output, "Model file")->required();
  train->add_option("--fraction", tr.fraction, "Train on 1/N of the records")
      ->capture_default_str()->check(CLI::PositiveNumber);
  train->add_option("--seed", tr.seed, "Subsample seed")->capture_default_str();

  RomanizeOptions ro;
  auto* romanize = app.add_subcommand("romanize", "Romanize corpus entries with a backoff chain");
  romanize->add_option("--in", ro.inputs, "Corpus TSV")->required()->check(CLI::ExistingFile);
  romanize->add_option("--out", ro.output, "Predictions TSV")->required();
  romanize->add_option("--chain", ro.chain, "Techniques in backoff order")->capture_default_str();
  romanize->add_flag("--no-entry-caps", ro.no_entry_caps, "Skip entry-initial capitalization");
  add_model_options(romanize, ro.paths);

  CombineOptions co;
  auto* combine_cmd = app.add_subcommand("combine", "Fill gaps in external predictions from a backoff");
  combine_cmd->add_option("--in", co.inputs, "Corpus TSV")->required()->check(CLI::ExistingFile);
  combine_cmd->add_option("--hyp", co.hypothesis, "External predictions TSV")
      ->required()->check(CLI::ExistingFile);
  combine_cmd->add_option("--backoff", co.backoff, "Backoff predictions TSV (instead of --chain)")
      ->check(CLI::ExistingFile);
  combine_cmd->add_option("--chain", co.chain, "Backoff chain when --backoff is absent")
      ->capture_default_str();
  combine_cmd->add_option("--out", co.output, "Combined predictions TSV")->required();
  combine_cmd->add_flag("--constant-gap", co.constant_gap, "Gap cost 1 instead of token length");
  add_model_options(combine_cmd, co.paths);

  EvaluateOptions ev;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Exact/CI/CPI word accuracy");
  evaluate_cmd->add_option("--pred", ev.predictions, "Predictions TSV")
      ->required()->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--ref", ev.references, "Reference corpus TSV")
      ->required()->check(CLI::ExistingFile);
  evaluate_cmd->add_flag("--lenient", ev.lenient, "Align predictions with wrong token counts");
  evaluate_cmd->add_option("--format", ev.format, "text, kv or both")
      ->capture_default_str()->check(CLI::IsMember({"text", "kv", "both"}));
  evaluate_cmd->add_option("--out", ev.output, "Also write the report here");
  evaluate_cmd->add_flag("--no-punctuation-set", ev.no_punctuation,
                         "CPI with an empty punctuation set");

  AblateOptions ab;
  auto* ablate = app.add_subcommand("ablate", "MLE accuracy by training-data fraction");
  ablate->add_option("--train", ab.train, "Training corpus TSV")->required()->check(CLI::ExistingFile);
  ablate->add_option("--dev", ab.dev, "Evaluation corpus TSV")->required()->check(CLI::ExistingFile);
  ablate->add_option("--fractions", ab.fractions, "Denominators")->capture_default_str();
  ablate->add_option("--seed", ab.seed, "Subsample seed")->capture_default_str();
  ablate->add_option("--chain", ab.chain, "Chain; must include mle")->capture_default_str();
  ablate->add_option("--out", ab.output, "Also write the table here");
  add_model_options(ablate, ab.paths);

  ErrorSampleOptions es;
  auto* errors = app.add_subcommand("error-sample", "Sample CPI errors for manual labelling");
  errors->add_option("--pred", es.predictions, "Predictions TSV")->required()->check(CLI::ExistingFile);
  errors->add_option("--ref", es.references, "Reference corpus TSV")
      ->required()->check(CLI::ExistingFile);
  errors->add_option("-n,--count", es.n, "Sample size")->capture_default_str();
  errors->add_option("--seed", es.seed, "Sample seed")->capture_default_str();
  errors->add_option("--out", es.output, "Output TSV (default: stdout)");

  bool version_json = false;
  std::string version_rules;
  auto* version = app.add_subcommand("version", "Tool and rule-table versions");
  version->add_flag("--json", version_json, "Machine-readable output");
  version->add_option("--rules", version_rules, "Rule table to report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: code=usage message=\"" << quote(e.what()) << "\"\n";
    return 2;
  }

  try {
    if (*extract) cmd_extract(ex, g, *extract, out);
    if (*clean) cmd_clean(cl, g, *clean, out);
    if (*split) cmd_split(sp, g, *split, out);
    if (*train) cmd_train(tr, g, *train, out);
    if (*romanize) cmd_romanize(ro, g, *romanize, out);
    if (*combine_cmd) cmd_combine(co, g, *combine_cmd, out);
    if (*evaluate_cmd) cmd_evaluate(ev, g, *evaluate_cmd, out);
    if (*ablate) cmd_ablate(ab, g, *ablate, out);
    if (*errors) cmd_error_sample(es, g, *errors, out);
    if (*version) cmd_version(version_json, version_rules, g, out);
  } catch (const Error& e) {
    err << "error: code=" << e.code() << " message=\"" << quote(e.what()) << "\"\n";
    return 1;
  } catch (const fs::filesystem_error& e) {
    err << "error: code=io message=\"" << quote(e.what()) << "\"\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: code=internal message=\"" << quote(e.what()) << "\"\n";
    return 1;
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("alalc");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace alalc::cli
