// Copyright 2026 The Corn Authors.
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

#include "corn/cli.h"

#include <algorithm>
#include <future>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "corn/backend/http_backend.h"
#include "corn/backend/oracle.h"
#include "corn/backend/rule_backend.h"
#include "corn/backend/server.h"
#include "corn/backend/stub_backend.h"
#include "corn/casting/predictor.h"
#include "corn/curation/annotated_corpus.h"
#include "corn/curation/dataset.h"
#include "corn/curation/lexicon.h"
#include "corn/eval/gold.h"
#include "corn/eval/metrics.h"
#include "corn/eval/report.h"
#include "corn/eval/semeval.h"
#include "corn/io.h"
#include "corn/scl/scl_check.h"

namespace corn::cli {

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoViableCategory:
      return kExitNoViable;
    case ErrorCode::kBackendUnavailable:
    case ErrorCode::kMalformedResponse:
      return kExitBackendDown;
    case ErrorCode::kNonFinite:
    case ErrorCode::kDegenerateBatch:
      return kExitFailure;
    default:
      return kExitBadInput;
  }
}

std::shared_ptr<const backend::NliBackend> MakeBackend(const BackendFlags& flags,
                                                       const casting::PromptConfig& prompts) {
  const std::string& spec = flags.spec;
  if (spec.rfind("oracle:", 0) == 0) {
    const auto mode = flags.oracle_strict ? backend::OracleBackend::Mode::kStrict
                                          : backend::OracleBackend::Mode::kLenient;
    return std::make_shared<backend::OracleBackend>(
        backend::OracleFromGoldFile(spec.substr(7), prompts, flags.max_span_len, mode));
  }
  if (spec.rfind("http:", 0) == 0) {
    // Accept both "http:host:port" and "http:http://host:port".
    std::string url = spec.substr(5);
    if (url.rfind("http://", 0) != 0 && url.rfind("https://", 0) != 0) {
      url = "http://" + url;
    }
    auto options = backend::HttpBackendOptions::FromEnv(url);
    options.batch_size = flags.batch_size;
    return std::make_shared<backend::HttpBackend>(std::move(options));
  }
  if (spec == "rule") {
    if (flags.positive_lexicon.empty() || flags.negative_lexicon.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "the rule backend needs --positive and --negative lexicons");
    }
    curation::OpinionLexicon lexicon =
        curation::LoadOpinionLexicon(flags.positive_lexicon, flags.negative_lexicon);
    curation::TermSet aspects;
    if (!flags.known_aspects.empty()) aspects = curation::LoadTermList(flags.known_aspects);
    curation::PolarityOptions polarity;
    polarity.negation = flags.negation;
    return std::make_shared<backend::RuleBackend>(std::move(lexicon), prompts,
                                                  std::move(aspects), polarity);
  }
  if (spec == "stub") return std::make_shared<backend::StubBackend>();
  throw Error(ErrorCode::kInvalidArgument,
              "unknown backend '" + spec + "' (expected oracle:PATH, http:URL, rule or stub)");
}

namespace {

// Applies fn to every index in [0, n) on up to `workers` threads; results
// keep index order.
template <typename T, typename Fn>
std::vector<T> ParallelMap(size_t n, size_t workers, Fn fn) {
  std::vector<T> out(n);
  workers = std::clamp<size_t>(workers, 1, std::max<size_t>(n, 1));
  if (workers == 1) {
    for (size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::future<void>> jobs;
  const size_t chunk = (n + workers - 1) / workers;
  for (size_t begin = 0; begin < n; begin += chunk) {
    const size_t end = std::min(n, begin + chunk);
    jobs.push_back(std::async(std::launch::async, [&out, &fn, begin, end] {
      for (size_t i = begin; i < end; ++i) out[i] = fn(i);
    }));
  }
  for (auto& job : jobs) job.get();
  return out;
}

void AddBackendFlags(CLI::App* cmd, BackendFlags& flags, bool with_batch) {
  cmd->add_option("--backend", flags.spec, "oracle:PATH | http:URL | rule | stub")
      ->required();
  if (with_batch) {
    cmd->add_option("--batch-size", flags.batch_size, "Pairs per HTTP request")
        ->check(CLI::PositiveNumber);
  }
  cmd->add_option("--max-span-len", flags.max_span_len, "Longest candidate span in tokens")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--oracle-strict", flags.oracle_strict,
                "Fail on pairs missing from the oracle table");
  cmd->add_option("--positive", flags.positive_lexicon, "Positive opinion words (rule)");
  cmd->add_option("--negative", flags.negative_lexicon, "Negative opinion words (rule)");
  cmd->add_option("--aspects", flags.known_aspects, "Known aspect terms, one per line (rule)");
}

struct PromptFlags {
  std::string domain_label = casting::PromptConfig{}.domain_label;
  std::string ae_template = casting::PromptConfig{}.ae_template;
  std::string asc_template = casting::PromptConfig{}.asc_template;

  casting::PromptConfig Build() const {
    casting::PromptConfig config{domain_label, ae_template, asc_template};
    config.Validate();
    return config;
  }
};

void AddPromptFlags(CLI::App* cmd, PromptFlags& flags) {
  cmd->add_option("--domain-label", flags.domain_label, "Subject of the AE hypothesis");
  cmd->add_option("--ae-template", flags.ae_template, "AE hypothesis template");
  cmd->add_option("--asc-template", flags.asc_template, "ASC hypothesis template");
}

// ---- curate ---------------------------------------------------------------

struct CurateFlags {
  std::string corpus;
  std::string positive;
  std::string negative;
  std::string seeds;
  std::string out;
  uint64_t seed = 0;
  size_t per_label_target = 100000;
  size_t per_category_cap = 50000;
  size_t clause_cap = 10;
  size_t k_min = 6;
  size_t k_max = 10;
  std::string negation = "off";
  size_t workers = 1;
};

int Curate(const CurateFlags& f, std::ostream& out, std::ostream& err) {
  const auto corpus = curation::LoadAnnotatedCorpus(f.corpus);
  size_t ambiguous = 0;
  const auto lexicon = curation::LoadOpinionLexicon(f.positive, f.negative, &ambiguous);
  const auto seeds = curation::LoadSeedAspects(f.seeds);
  if (ambiguous > 0) {
    err << "curate: dropped " << ambiguous << " terms listed as both positive and negative\n";
  }
  std::set<std::string> categories;
  for (const auto& s : corpus) categories.insert(s.category);
  err << "curate: " << corpus.size() << " sentences, " << categories.size()
      << " categories, " << seeds.size() << " with seed aspects\n";

  curation::CurationConfig config;
  config.rng_seed = f.seed;
  config.per_label_target = f.per_label_target;
  config.per_category_cap = f.per_category_cap;
  config.clause_cap = f.clause_cap;
  config.k_min = f.k_min;
  config.k_max = f.k_max;
  config.polarity.negation = f.negation == "on";
  config.workers = f.workers;

  const curation::RnliDataset dataset =
      curation::GenerateDataset(corpus, seeds, lexicon, config);
  curation::WriteDataset(dataset, f.out);
  for (const auto& [label, count] : dataset.stats.labels) {
    out << label << "\t" << count << "\n";
  }
  for (const auto& [split, count] : dataset.stats.splits) {
    err << "curate: " << split << " " << count << "\n";
  }
  return kExitOk;
}

// ---- predict --------------------------------------------------------------

struct PredictFlags {
  std::string task;
  std::string input;
  std::string out;
  BackendFlags backend;
  PromptFlags prompts;
  std::string negation = "off";
  std::optional<double> threshold;
  size_t workers = 1;
  uint64_t seed = 0;
};

int Predict(PredictFlags f, std::ostream& out, std::ostream& err) {
  f.backend.negation = f.negation == "on";
  const casting::PromptConfig prompts = f.prompts.Build();
  const auto inputs = LoadInputSentences(f.input);
  const auto model = MakeBackend(f.backend, prompts);
  err << "predict: " << inputs.size() << " sentences, task " << f.task << ", backend "
      << model->Name() << "\n";

  casting::AeOptions ae;
  ae.max_span_len = f.backend.max_span_len;
  ae.entail_threshold = f.threshold;

  if (f.task == "asc" && std::none_of(inputs.begin(), inputs.end(), [](const InputSentence& in) {
        return !in.aspects.empty();
      })) {
    throw Error(ErrorCode::kMalformedInput, "asc needs aspects in the input; none were given");
  }
  const auto records = ParallelMap<PredictionRecord>(
      inputs.size(), f.workers, [&](size_t i) -> PredictionRecord {
        const InputSentence& in = inputs[i];
        if (f.task == "ae") return ToRecord(in, casting::PredictAe(in.sentence, prompts, *model, ae));
        if (f.task == "e2e") {
          return ToRecord(in, casting::PredictE2e(in.sentence, prompts, *model, ae));
        }
        std::vector<casting::AscPrediction> preds;
        for (const auto& [start, end] : in.aspects) {
          preds.push_back(casting::PredictAsc(
              in.sentence, in.sentence.Slice(start, end), prompts, *model));
        }
        return ToRecord(in, preds);
      });

  std::string body;
  for (const PredictionRecord& r : records) body += SerializePrediction(r) + "\n";
  if (f.out.empty()) {
    out << body;
  } else {
    WriteFile(f.out, body);
    err << "predict: wrote " << records.size() << " predictions to " << f.out << "\n";
  }
  return kExitOk;
}

// ---- eval -----------------------------------------------------------------

struct EvalFlags {
  std::string task;
  std::string pred;
  std::string gold;
  std::string out;
  std::string format = "table";
};

std::string JoinIds(const std::vector<std::string>& ids) {
  std::string s;
  for (size_t i = 0; i < ids.size() && i < 20; ++i) s += (i ? ", " : "") + ids[i];
  if (ids.size() > 20) s += ", ... (" + std::to_string(ids.size()) + " total)";
  return s;
}

template <typename Label, typename Parse>
std::vector<Label> ParseLabels(const PredictionRecord& r, Parse parse) {
  std::vector<Label> labels;
  for (const std::string& l : r.labels) labels.push_back(parse(l));
  return labels;
}

int Eval(const EvalFlags& f, std::ostream& out, std::ostream& err) {
  const auto gold = eval::LoadGold(f.gold);
  const auto preds = LoadPredictions(f.pred);

  std::map<std::string, const PredictionRecord*> by_id;
  std::vector<std::string> duplicates;
  for (const PredictionRecord& p : preds) {
    if (!by_id.emplace(p.sentence_id, &p).second) duplicates.push_back(p.sentence_id);
  }
  if (!duplicates.empty()) {
    throw Error(ErrorCode::kIdMismatch, "duplicate prediction ids: " + JoinIds(duplicates));
  }
  std::vector<std::string> missing;
  std::set<std::string> gold_ids;
  for (const eval::GoldSentence& g : gold) {
    gold_ids.insert(g.sentence_id);
    if (!by_id.count(g.sentence_id)) missing.push_back(g.sentence_id);
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kIdMismatch, "no prediction for gold ids: " + JoinIds(missing));
  }
  std::vector<std::string> extra;
  for (const auto& [id, p] : by_id) {
    if (!gold_ids.count(id)) extra.push_back(id);
  }
  if (!extra.empty()) {
    throw Error(ErrorCode::kIdMismatch, "predictions for unknown ids: " + JoinIds(extra));
  }

  eval::MetricReport report;
  if (f.task == "asc") {
    std::vector<Polarity> p, g;
    for (const eval::GoldSentence& gs : gold) {
      const PredictionRecord& r = *by_id.at(gs.sentence_id);
      for (const eval::GoldAspect& a : gs.aspects) {
        auto hit = std::find_if(r.spans.begin(), r.spans.end(), [&](const PredictedSpan& s) {
          return s.start == a.start && s.end == a.end;
        });
        if (hit == r.spans.end()) {
          throw Error(ErrorCode::kIdMismatch,
                      "sentence " + gs.sentence_id + ": no prediction for aspect [" +
                          std::to_string(a.start) + ", " + std::to_string(a.end) + ")");
        }
        p.push_back(ParsePolarity(hit->label));
        g.push_back(a.polarity);
      }
    }
    report = eval::AscMetrics(p, g);
  } else if (f.task == "ae") {
    std::vector<std::vector<BioLabel>> p, g;
    for (const eval::GoldSentence& gs : gold) {
      p.push_back(ParseLabels<BioLabel>(*by_id.at(gs.sentence_id), ParseBioLabel));
      g.push_back(gs.ae_labels);
    }
    report = eval::AeMetrics(p, g);
  } else {
    std::vector<std::vector<E2eLabel>> p, g;
    for (const eval::GoldSentence& gs : gold) {
      p.push_back(ParseLabels<E2eLabel>(*by_id.at(gs.sentence_id), ParseE2eLabel));
      g.push_back(gs.e2e_labels);
    }
    report = eval::E2eMetrics(p, g);
  }

  const std::string json = eval::ReportToJson(report);
  out << (f.format == "json" ? json + "\n" : eval::ReportToTable(report));
  if (!f.out.empty()) {
    WriteFile(f.out, json + "\n");
    err << "eval: wrote " << f.out << "\n";
  }
  return kExitOk;
}

// ---- convert --------------------------------------------------------------

struct ConvertFlags {
  std::string input;
  std::string out;
  std::string report;
};

int Convert(const ConvertFlags& f, std::ostream& out, std::ostream& err) {
  const eval::SemEvalConversion result = eval::ConvertSemEvalFile(f.input);
  eval::WriteGold(f.out, result.sentences);
  for (const std::string& w : result.report.warnings) err << "convert: warning: " << w << "\n";
  const std::string json = eval::ConversionReportToJson(result.report);
  out << json << "\n";
  if (!f.report.empty()) WriteFile(f.report, json + "\n");
  return kExitOk;
}

// ---- scl-check ------------------------------------------------------------

int SclCheck(uint64_t seed, std::ostream& out) {
  scl::CheckOptions options;
  options.seed = seed;
  bool all = true;
  for (const scl::CheckResult& r : scl::RunSclChecks(options)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    all = all && r.passed;
  }
  return all ? kExitOk : kExitFailure;
}

// ---- serve ----------------------------------------------------------------

struct ServeFlags {
  BackendFlags backend;
  PromptFlags prompts;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string model_name;
};

int Serve(const ServeFlags& f, std::ostream& out) {
  const auto model = MakeBackend(f.backend, f.prompts.Build());
  backend::NliServer server(model, f.model_name.empty() ? model->Name() : f.model_name);
  const int port = server.Bind(f.host, f.port);
  out << "listening on http://" << f.host << ":" << port << std::endl;
  server.Run();
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-shot aspect-based sentiment analysis through NLI casting", "corn"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "corn 0.1.0");
  const std::vector<std::string> kTasks = {"ae", "asc", "e2e"};
  const std::vector<std::string> kOnOff = {"on", "off"};

  CurateFlags curate;
  auto* c = app.add_subcommand("curate", "Build RNLI data from an annotated corpus");
  c->add_option("--corpus,--input", curate.corpus, "Annotated corpus JSONL")->required();
  c->add_option("--positive", curate.positive, "Positive opinion words")->required();
  c->add_option("--negative", curate.negative, "Negative opinion words")->required();
  c->add_option("--seeds", curate.seeds, "Seed aspects per category (JSON)")->required();
  c->add_option("--out", curate.out, "Output directory")->required();
  c->add_option("--seed", curate.seed, "RNG seed");
  c->add_option("--per-label-target", curate.per_label_target, "Examples per NLI label");
  c->add_option("--per-category-cap", curate.per_category_cap, "Examples per category");
  c->add_option("--clause-cap", curate.clause_cap, "Clauses per (aspect, polarity)");
  c->add_option("--k-min", curate.k_min, "Fewest clauses per premise");
  c->add_option("--k-max", curate.k_max, "Most clauses per premise");
  c->add_option("--negation", curate.negation, "Flip polarity after negators")
      ->check(CLI::IsMember(kOnOff));
  c->add_option("--workers", curate.workers, "Categories processed in parallel");

  PredictFlags predict;
  auto* p = app.add_subcommand("predict", "Run an ABSA task through an NLI backend");
  p->add_option("--task", predict.task, "ae, asc or e2e")
      ->required()
      ->check(CLI::IsMember(kTasks));
  p->add_option("--input", predict.input, "Sentences (JSONL or plain text)")->required();
  p->add_option("--out", predict.out, "Prediction JSONL (default stdout)");
  AddBackendFlags(p, predict.backend, true);
  AddPromptFlags(p, predict.prompts);
  p->add_option("--negation", predict.negation, "Negation handling in the rule backend")
      ->check(CLI::IsMember(kOnOff));
  p->add_option("--threshold", predict.threshold, "AE entailment threshold");
  p->add_option("--workers", predict.workers, "Sentences processed in parallel");
  p->add_option("--seed", predict.seed, "Accepted for uniformity; prediction is deterministic");

  EvalFlags evalf;
  auto* e = app.add_subcommand("eval", "Score predictions against gold");
  e->add_option("--task", evalf.task, "ae, asc or e2e")
      ->required()
      ->check(CLI::IsMember(kTasks));
  e->add_option("--pred,--input", evalf.pred, "Prediction JSONL")->required();
  e->add_option("--gold", evalf.gold, "Gold JSONL")->required();
  e->add_option("--out", evalf.out, "Write the JSON report here");
  e->add_option("--format", evalf.format, "Console output: table or json")
      ->check(CLI::IsMember({"table", "json"}));

  ConvertFlags convert;
  auto* v = app.add_subcommand("convert", "Convert SemEval XML to gold JSONL");
  v->add_option("--input", convert.input, "SemEval XML")->required();
  v->add_option("--out", convert.out, "Gold JSONL")->required();
  v->add_option("--report", convert.report, "Write the conversion report here");

  uint64_t scl_seed = scl::CheckOptions{}.seed;
  auto* s = app.add_subcommand("scl-check", "Run the contrastive loss property suite");
  s->add_option("--seed", scl_seed, "Seed for the random batches");

  ServeFlags serve;
  auto* sv = app.add_subcommand("serve", "Serve a backend over the classification protocol");
  AddBackendFlags(sv, serve.backend, false);
  AddPromptFlags(sv, serve.prompts);
  sv->add_option("--host", serve.host, "Bind address");
  sv->add_option("--port", serve.port, "Port (0 picks a free one)");
  sv->add_option("--model-name", serve.model_name, "Name reported by /v1/health");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "corn 0.1.0\n";
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "corn: " << ex.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (c->parsed()) return Curate(curate, out, err);
    if (p->parsed()) return Predict(predict, out, err);
    if (e->parsed()) return Eval(evalf, out, err);
    if (v->parsed()) return Convert(convert, out, err);
    if (s->parsed()) return SclCheck(scl_seed, out);
    if (sv->parsed()) return Serve(serve, out);
  } catch (const Error& ex) {
    err << "corn: " << ex.what() << "\n";
    return ExitCodeFor(ex.code());
  } catch (const std::exception& ex) {
    err << "corn: " << ex.what() << "\n";
    return kExitFailure;
  }
  return kExitBadInput;
}

}  // namespace corn::cli
