#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "defectkit/cli/commands.hpp"

namespace cli = defectkit::cli;

namespace {

struct Options {
  cli::RunConfig config;
  std::string word;
  std::string seed;
  std::string out_dir = ".";
};

void add_common(CLI::App* sub, Options& o, bool word) {
  sub->add_option("--morphism", o.config.morphism, "Morphism, e.g. \"a->aabcacba,b->aa,c->a\"");
  if (word) sub->add_option("--word", o.word, "Literal word over the morphism alphabet");
  sub->add_option("--seed", o.seed, "Fixed-point letter (default: first growing one)");
  sub->add_option("--n-max", o.config.n_max, "Language snapshot length bound")->capture_default_str();
  sub->add_option("--horizon", o.config.horizon, "Fixed-point prefix length for stream checks")->capture_default_str();
  sub->add_option("--growth-window", o.config.growth_window, "Checkpoints that must agree for Stable(d)")
      ->capture_default_str();
  sub->add_option("--format", o.config.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, cli::OutputFormat>{
          {"json", cli::OutputFormat::Json}, {"text", cli::OutputFormat::Text}}));
  sub->add_option("--out-dir", o.out_dir, "Directory for DOT files")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Palindromic defect toolkit for morphic words"};
  app.set_version_flag("--version", std::string(cli::tool_version()));
  app.require_subcommand(1);

  Options o;
  CLI::App* defect = app.add_subcommand("defect", "Defect of a word, or defect verdict of a fixed point");
  add_common(defect, o, true);
  CLI::App* graphs = app.add_subcommand("graphs", "Extension graphs of a factor as DOT files and JSON");
  add_common(graphs, o, true);
  CLI::App* verify = app.add_subcommand("verify", "Run one verifier suite");
  add_common(verify, o, true);
  verify->add_option("--suite", o.config.suite, "eq1, lemma42, lemma44, prop54, thm55, lemma61, thm72, phi, audit, section8")
      ->required();
  verify->add_option("--n", o.config.n, "Single length for eq1");
  verify->add_option("--threshold", o.config.threshold, "Threshold K/M for thm55 and prop54");
  verify->add_option("--sample", o.config.sample, "Sample size for phi")->capture_default_str();
  CLI::App* corpus = app.add_subcommand("corpus", "Run the built-in expectations table");
  add_common(corpus, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::exit_code::kUsage;
  }

  for (CLI::App* sub : {defect, graphs, verify}) {
    if (sub->parsed() && sub->count("--word") > 0) o.config.word = o.word;
  }
  if (!o.seed.empty()) {
    if (o.seed.size() != 1) {
      std::cerr << "error: --seed must be a single letter\n";
      return cli::exit_code::kUsage;
    }
    o.config.seed = o.seed.front();
  }

  cli::CommandResult result;
  if (defect->parsed()) result = cli::cmd_defect(o.config);
  else if (graphs->parsed()) result = cli::cmd_graphs(o.config);
  else if (verify->parsed()) result = cli::cmd_verify(o.config);
  else result = cli::cmd_corpus(o.config);

  try {
    cli::write_files(result, o.out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code::kUsage;
  }
  std::cout << result.output;
  return result.exit_code;
}
