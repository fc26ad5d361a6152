// Replays every ```console block of README.md: lines starting with "$ sl2cat"
// are commands, the following lines up to the next command are the expected
// stdout followed by stderr, and "(exit status N)" records a nonzero status.

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Example {
  std::size_t line = 0;
  std::string command;
  std::string expected;
  int rc = 0;
};

std::vector<Example> parse_readme(std::istream& in) {
  std::vector<Example> out;
  std::string line;
  bool in_block = false;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!in_block) {
      in_block = line == "```console";
      continue;
    }
    if (line == "```") {
      in_block = false;
      continue;
    }
    if (line.rfind("$ ", 0) == 0) {
      out.push_back({n, line.substr(2), "", 0});
      continue;
    }
    if (out.empty()) continue;
    if (line.rfind("(exit status ", 0) == 0) {
      out.back().rc = std::stoi(line.substr(13));
      continue;
    }
    out.back().expected += line + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: readme_examples README.md\n";
    return 2;
  }
  const std::filesystem::path readme = std::filesystem::absolute(argv[1]);
  std::ifstream in(readme);
  if (!in) {
    std::cerr << "cannot read " << readme << "\n";
    return 2;
  }
  std::filesystem::current_path(readme.parent_path());
  const auto examples = parse_readme(in);
  int failures = 0;
  for (const auto& ex : examples) {
    auto args = sl2cat::cli::split_command_line(ex.command);
    if (args.empty() || args.front() != "sl2cat") {
      std::cerr << "README.md:" << ex.line << ": not an sl2cat command: " << ex.command << "\n";
      ++failures;
      continue;
    }
    args.erase(args.begin());
    std::ostringstream out, err;
    const int rc = sl2cat::cli::run(args, out, err);
    const std::string got = out.str() + err.str();
    if (got != ex.expected || rc != ex.rc) {
      ++failures;
      std::cerr << "README.md:" << ex.line << ": " << ex.command << "\n"
                << "--- expected (exit " << ex.rc << ")\n" << ex.expected
                << "--- got (exit " << rc << ")\n" << got;
    }
  }
  std::cout << examples.size() - failures << "/" << examples.size() << " README examples match\n";
  return failures == 0 && !examples.empty() ? 0 : 1;
}
