// ncpbw: Groebner bases and the general PBW property for finitely presented
// filtered algebras over Q.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ncpbw/cli.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

struct Options {
  std::string file;
  std::size_t degree_bound = 8;
  std::size_t max_pairs = 100000;
  std::string precedence;
  std::string output = "json";
  std::string element;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-bounded noncommutative Groebner bases and PBW checks"};
  app.require_subcommand(1);
  Options opt;
  const std::pair<ncpbw::Command, const char*> commands[] = {
      {ncpbw::Command::gb, "reduced Groebner basis of the relations"},
      {ncpbw::Command::nf, "normal form of --element modulo the Groebner basis"},
      {ncpbw::Command::pbw, "decide the general PBW property"},
      {ncpbw::Command::gr, "presentation of the associated graded algebra"},
      {ncpbw::Command::rees, "presentation of the Rees algebra"},
      {ncpbw::Command::hilbert, "Hilbert function of the associated graded algebra"},
      {ncpbw::Command::koszul, "quadratic Groebner basis Koszulity criterion"},
  };
  for (const auto& [cmd, help] : commands) {
    auto* sub = app.add_subcommand(ncpbw::to_string(cmd), help);
    sub->add_option("file", opt.file, "algebra presentation file")->required()->check(CLI::ExistingFile);
    sub->add_option("--degree-bound", opt.degree_bound, "degree bound")->capture_default_str();
    sub->add_option("--max-pairs", opt.max_pairs, "ambiguity budget")->capture_default_str();
    sub->add_option("--order-precedence", opt.precedence, "comma separated generators, largest first");
    sub->add_option("--output", opt.output, "report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    if (cmd == ncpbw::Command::nf) sub->add_option("--element", opt.element, "element to reduce")->required();
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ncpbw::kExitError;
  }
  const auto* chosen = app.get_subcommands().front();

  try {
    std::ifstream in(opt.file, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    ncpbw::JobSpec job = ncpbw::parse_input(buf.str());
    job.command = *ncpbw::parse_command(chosen->get_name());
    job.degree_bound = opt.degree_bound;
    job.max_pairs = opt.max_pairs;
    job.output = opt.output == "text" ? ncpbw::OutputFormat::text : ncpbw::OutputFormat::json;
    if (!opt.precedence.empty()) {
      job.precedence = split_commas(opt.precedence);
      (void)job.order();
    }
    if (job.command == ncpbw::Command::nf) {
      try {
        job.element = ncpbw::parse_expression(job.algebra, opt.element);
      } catch (const ncpbw::Error& e) {
        std::cerr << "ncpbw: --element: " << e.what() << "\n";
        return ncpbw::kExitError;
      }
    }

    auto result = ncpbw::run(job);
    if (job.output == ncpbw::OutputFormat::json) {
      std::cout << result.report.dump(2) << "\n";
    } else {
      std::cout << ncpbw::render_text(result.report);
    }
    if (result.report.contains("error")) std::cerr << "ncpbw: " << result.report["error"].get<std::string>() << "\n";
    return result.exit_code;
  } catch (const ncpbw::Error& e) {
    std::cerr << "ncpbw: " << opt.file << ": " << e.what() << "\n";
    return ncpbw::kExitError;
  }
}
