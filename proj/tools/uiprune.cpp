// Command-line front end: run, evaluate, intrusion, train-informative,
// table2-check.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "uiprune/uiprune.hpp"

namespace fs = std::filesystem;
using namespace uiprune;

namespace {

enum Exit { ok = 0, internal = 1, invalid = 2 };

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::optional<double> threshold;
};

void add_common(CLI::App* cmd, Common& c, bool threshold) {
  cmd->add_option("--config", c.config, "pipeline config (JSON)")->required();
  cmd->add_option("--seed", c.seed, "master seed; overrides the config");
  cmd->add_option("--out", c.out, "output directory; overrides the config");
  if (threshold) cmd->add_option("--threshold", c.threshold, "link threshold in (0, 1]; overrides the config");
}

PipelineConfig load_config(const Common& c) {
  auto cfg = PipelineConfig::load(c.config);
  if (c.seed) cfg.seed = *c.seed;
  if (!c.out.empty()) cfg.output = fs::absolute(c.out).string();
  if (c.threshold) cfg.link_threshold = *c.threshold;
  return cfg;
}

void write_pair(const fs::path& stem, const json& j, const std::string& md) {
  csv::write_file(fs::path(stem.string() + ".json"), j.dump(2) + "\n");
  csv::write_file(fs::path(stem.string() + ".md"), md);
}

int cmd_run(const Common& c) {
  Pipeline p(load_config(c));
  auto res = p.run();
  std::size_t del = 0;
  for (const auto& r : res.element_recs) del += r.predicted_delete;
  std::cout << "wrote " << (p.out_dir() / "report.json").string() << " (" << res.element_recs.size()
            << " elements, " << del << " delete)\n";
  for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
  return ok;
}

int cmd_evaluate(const Common& c, const EvaluateOptions& opt) {
  auto cfg = load_config(c);
  cfg.validate();
  auto j = evaluate_run(cfg, opt);
  auto out = cfg.resolve(cfg.output);
  write_pair(out / "evaluation", j, evaluation_markdown(j));
  const auto& m = j["overall"];
  std::cout << "tp=" << m["tp"] << " fp=" << m["fp"] << " fn=" << m["fn"] << " tn=" << m["tn"]
            << " f1=" << format_double(m["f1"].get<double>()) << "\n";
  return ok;
}

int cmd_intrusion(const Common& c, const std::string& judgments) {
  auto cfg = load_config(c);
  cfg.validate();
  auto out = cfg.resolve(cfg.output);
  auto theta = load_theta(detail::require_artifact(out / "topics" / "theta.csv"));
  auto set = build_intrusion_tasks(theta, derive_seed(*cfg.seed, "intrusion"));
  auto dir = out / "intrusion";

  if (judgments.empty()) {
    csv::write_file(dir / "tasks.csv", tasks_csv(set));
    // blank sheet for judges
    std::string sheet = csv::format_row({"task_id", "judge", "selected_topic"});
    for (const auto& t : set.tasks) sheet += csv::format_row({t.task_id, "", ""});
    csv::write_file(dir / "judgments_template.csv", sheet);

    std::map<std::pair<std::string, int>, std::map<int, std::string>> words;
    auto wrows = csv::read(detail::require_artifact(out / "topics" / "topic_words.csv"));
    for (std::size_t i = 1; i < wrows.size(); ++i) {
      const auto& r = wrows[i];
      auto rel = parse_int(csv::field(r, 1)), t = parse_int(csv::field(r, 2));
      if (rel && t) words[{csv::field(r, 0), static_cast<int>(*rel)}][static_cast<int>(*t)] = csv::field(r, 3);
    }
    auto store = CorpusStore::load(out);
    std::map<std::string, std::string> text;
    for (const auto& r : store.reviews) text[r.review_id] = r.text;
    std::string md = "# Topic intrusion tasks\n\nFor each review pick the topic that does not belong. "
                     "Record the topic number in judgments_template.csv.\n";
    for (std::size_t i = 0; i < set.tasks.size(); ++i) {
      const auto& t = set.tasks[i];
      md += "\n## " + t.task_id + "\n\n> " + text[t.review_id] + "\n\n";
      auto shown = t.shown_topics;
      std::sort(shown.begin(), shown.end());
      for (int k : shown) md += "- topic " + std::to_string(k) + ": " + words[set.task_group[i]][k] + "\n";
    }
    csv::write_file(dir / "judge_sheet.md", md);
    std::cout << "wrote " << set.tasks.size() << " tasks to " << (dir / "tasks.csv").string();
    if (set.skipped_models) std::cout << " (" << set.skipped_models << " topic models with fewer than 3 topics skipped)";
    std::cout << "\n";
    return ok;
  }

  attach_judgments(set, judgments);
  std::string per_task;
  auto j = tlo_report(set, theta, cfg, per_task);
  csv::write_file(dir / "tlo.csv", per_task);
  std::string md = "# Topic log odds\n\n- judged tasks: " + std::to_string(j["judged_tasks"].get<std::size_t>()) +
                   "\n- mean TLO: " + format_double(j["mean_tlo"].get<double>()) +
                   "\n- median TLO: " + format_double(j["median_tlo"].get<double>()) + "\n";
  write_pair(dir / "tlo", j, md);
  std::cout << "mean TLO " << format_double(j["mean_tlo"].get<double>()) << " over " << j["judged_tasks"]
            << " tasks\n";
  return ok;
}

struct TrainOptions {
  std::string training;
  std::string out;
  bool balance = false;
  double alpha = 1.0;
  bool cv = false;
  std::uint64_t seed = 0;
};

int cmd_train_informative(const TrainOptions& o) {
  if (!fs::exists(o.training)) throw InputError("training file not found: " + o.training);
  if (!(o.alpha > 0)) throw InputError("--alpha must be positive");
  TextPrep prep;
  auto data = load_labeled_reviews(o.training, prep);
  if (o.balance) data = balance_classes(std::move(data), derive_seed(o.seed, "informative"));
  auto model = train_nb(data, o.alpha);
  model.save(o.out);
  std::cout << "wrote " << o.out << " (" << data.size() << " training reviews)\n";
  if (o.cv) {
    std::vector<bool> y;
    for (const auto& d : data) y.push_back(d.label == Informativeness::informative);
    auto res = kfold_cv(y, 10, 10, derive_seed(o.seed, "cv"), [&](const auto& train, const auto& test) {
      std::vector<LabeledReview> tr;
      for (auto i : train) tr.push_back(data[i]);
      auto m = train_nb(tr, o.alpha);
      std::vector<bool> pred;
      for (auto i : test) pred.push_back(m.classify(data[i].tokens).label == Informativeness::informative);
      return pred;
    });
    json j = {{"folds", 10},
              {"repeats", 10},
              {"mean_precision", res.mean.precision},
              {"mean_recall", res.mean.recall},
              {"mean_f1", res.mean.f1},
              {"warnings", res.warnings}};
    std::string md = "# Informativeness classifier, 10 x 10-fold CV\n\n- mean precision: " +
                     format_double(res.mean.precision) + "\n- mean recall: " + format_double(res.mean.recall) +
                     "\n- mean F1: " + format_double(res.mean.f1) + "\n";
    write_pair(fs::path(o.out).replace_extension("").string() + ".cv", j, md);
    std::cout << "cv mean F1 " << format_double(res.mean.f1) << "\n";
  }
  return ok;
}

int cmd_table2(const std::string& table, const std::string& out) {
  auto rows = table.empty() ? builtin_table2() : load_table2(table);
  auto chk = check_table2(rows);
  json j;
  json lines = json::array();
  std::string md = "# Table 2 self-check\n\n| row | app | printed F1 | recomputed F1 | match |\n|---|---|---|---|---|\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& l = chk.lines[i];
    lines.push_back({{"row", rows[i].row},
                     {"app", rows[i].app},
                     {"printed_f1", rows[i].printed_f1},
                     {"recomputed_f1", l.computed_f1},
                     {"match", l.within}});
    md += "| " + rows[i].row + " | " + rows[i].app + " | " + format_double(rows[i].printed_f1) + " | " +
          detail::fmt(l.computed_f1, 4) + " | " + (l.within ? "yes" : "no") + " |\n";
  }
  j["rows"] = lines;
  j["matched"] = chk.matched;
  j["total"] = rows.size();
  j["mean_recomputed_f1"] = chk.mean_f1;
  md += "\n" + std::to_string(chk.matched) + "/" + std::to_string(rows.size()) + " rows match; mean recomputed F1 " +
        detail::fmt(chk.mean_f1, 4) + "\n";
  if (!out.empty()) write_pair(fs::path(out) / "table2_check", j, md);
  std::cout << chk.matched << "/" << rows.size() << " rows match, mean F1 " << detail::fmt(chk.mean_f1, 4) << "\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recommend deletion of UI elements from app store reviews"};
  app.set_version_flag("--version", std::string(version));
  app.require_subcommand(1);

  Common run_opts, eval_opts, intr_opts;
  auto* run = app.add_subcommand("run", "run the full pipeline and write a recommendation report");
  add_common(run, run_opts, true);

  EvaluateOptions eopt;
  auto* evaluate = app.add_subcommand("evaluate", "score a finished run against deletion labels");
  add_common(evaluate, eval_opts, false);
  evaluate->add_flag("--cv", eopt.cv, "also run repeated stratified k-fold CV over labeled clusters");
  evaluate->add_option("--folds", eopt.folds, "CV folds")->check(CLI::Range(2, 1000));
  evaluate->add_option("--repeats", eopt.repeats, "CV repeats")->check(CLI::Range(1, 1000));

  std::string judgments;
  auto* intrusion = app.add_subcommand("intrusion", "write topic intrusion tasks, or score filled judgments");
  add_common(intrusion, intr_opts, false);
  intrusion->add_option("--judgments", judgments, "CSV with task_id,judge,selected_topic");

  TrainOptions topt;
  auto* train = app.add_subcommand("train-informative", "train the informative-review classifier");
  train->add_option("--training", topt.training, "CSV with review_id,label,text")->required();
  train->add_option("--out", topt.out, "model file to write")->required();
  train->add_flag("--balance", topt.balance, "downsample the larger class");
  train->add_option("--alpha", topt.alpha, "Laplace smoothing");
  train->add_option("--seed", topt.seed, "seed for balancing and CV");
  train->add_flag("--cv", topt.cv, "report 10 x 10-fold cross-validation");

  std::string table, table_out;
  auto* table2 = app.add_subcommand("table2-check", "recompute F1 for the bundled Table 2 transcription");
  table2->add_option("--table", table, "alternative transcription CSV");
  table2->add_option("--out", table_out, "directory for table2_check.json/.md");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? ok : invalid;
  }

  try {
    if (*run) return cmd_run(run_opts);
    if (*evaluate) return cmd_evaluate(eval_opts, eopt);
    if (*intrusion) return cmd_intrusion(intr_opts, judgments);
    if (*train) return cmd_train_informative(topt);
    if (*table2) return cmd_table2(table, table_out);
  } catch (const StageError& e) {
    std::cerr << "error in stage " << e.what() << "\n";
    return e.input ? invalid : internal;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return invalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  }
  return internal;
}
