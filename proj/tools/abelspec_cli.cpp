// Copyright 2026 The abelspec Authors.
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

// Command-line front end. Talks to the library only through the C header.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abelspec/abelspec.h"

namespace {

constexpr int kExitInput = 1;

bool ReadAll(const std::string& path, std::string* out) {
  if (path == "-") {
    out->assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  *out = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier-analytic bounds on finite abelian groups"};
  std::string task_file;
  std::string out_path;
  bool oracle = false;
  std::vector<double> tol, tol_distinct, eps;
  std::vector<std::int64_t> m;
  app.add_option("task-file", task_file, "JSON problem file, or - for stdin")->required();
  app.add_flag("--oracle", oracle, "cross-check results against brute force");
  app.add_option("--tol", tol, "support tolerance")->expected(1);
  app.add_option("--tol-distinct", tol_distinct, "tolerance for distinct values")->expected(1);
  app.add_option("--m", m, "box size(s)")->expected(1, -1);
  app.add_option("--eps", eps, "mixing thresholds")->expected(1, -1);
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_flag_callback("--version", [] {
    std::cout << abelspec_version() << "\n";
    std::exit(0);
  }, "print the library version");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  std::string text;
  if (!ReadAll(task_file, &text)) {
    std::cerr << "error: cannot read '" << task_file << "'\n";
    return kExitInput;
  }

  abelspec_run_options opts{};
  opts.oracle = oracle ? 1 : 0;
  if (!tol.empty()) {
    opts.has_tol = 1;
    opts.tol = tol.front();
  }
  if (!tol_distinct.empty()) {
    opts.has_tol_distinct = 1;
    opts.tol_distinct = tol_distinct.front();
  }
  if (!m.empty()) {
    opts.m = m.data();
    opts.m_count = m.size();
  }
  if (!eps.empty()) {
    opts.eps = eps.data();
    opts.eps_count = eps.size();
  }

  char* report = nullptr;
  char* diagnostics = nullptr;
  int exit_code = 0;
  const abelspec_status st =
      abelspec_run_problem(text.c_str(), &opts, &report, &diagnostics, &exit_code);
  if (st != ABELSPEC_OK) {
    std::cerr << "error: " << abelspec_last_error() << "\n";
    return 2;
  }
  if (diagnostics != nullptr && diagnostics[0] != '\0') {
    std::cerr << "error: " << diagnostics << "\n";
  }
  if (out_path.empty()) {
    std::fputs(report, stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << report;
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      exit_code = kExitInput;
    }
  }
  abelspec_string_free(report);
  abelspec_string_free(diagnostics);
  return exit_code;
}
