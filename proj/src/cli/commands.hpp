#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gjs/io.hpp"

namespace gjs::cli {

struct OutputFile {
  std::filesystem::path path;
  std::string content;
};

struct Outcome {
  Json result;
  bool verification_failed = false;
  std::vector<OutputFile> files;
};

/// A validated job: all parameters are checked and captured, running it
/// only calls into the library.
struct Job {
  std::string command;
  std::function<Outcome()> run;
  std::optional<std::filesystem::path> out_dir;
};

struct Context {
  double divergence_bound = kDefaultDivergenceBound;
  std::filesystem::path base_dir;  // relative output paths resolve against this
};

enum class FlagKind { Value, Text, Switch, Repeated };

struct FlagSpec {
  std::string name;
  FlagKind kind;
  std::string help;
};

struct CommandSpec {
  std::string group;
  std::string name;
  std::string help;
  std::vector<FlagSpec> flags;
  std::string full_name() const { return group + " " + name; }
};

const std::vector<CommandSpec>& command_specs();

/// Throws ValidationError.
Job validate_job(const std::string& command, const Json& params, const Context& ctx);

/// Writes every output file, creating parent directories.
void write_outputs(const std::vector<OutputFile>& files);

/// Entry point shared by the executable and the tests. args excludes the
/// program name. Exit codes: 0 ok, 1 validation error, 2 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gjs::cli
