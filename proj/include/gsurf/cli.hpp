#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gsurf/topology.hpp"

namespace gsurf::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kValidation = 1, kCap = 2, kInvariant = 3 };

struct JobOptions {
  std::size_t cap_group = kDefaultGroupCap;
  std::size_t cap_oracle = kDefaultOracleCap;
  std::size_t cap_topology = kDefaultTopologyCap;
  bool oracle = false;  // run the chain-complex and commutant oracles where they apply
  std::optional<std::size_t> rational_class;
  std::optional<std::string> subgroup;
};

/// Command-line values that take precedence over a document's options.
struct Overrides {
  std::optional<std::size_t> cap_group;
  std::optional<std::size_t> cap_oracle;
  std::optional<std::size_t> cap_topology;
  std::optional<std::string> subgroup;
  std::optional<bool> oracle;
};

struct NamedSubgroup {
  std::string name;
  std::vector<int> generators;
  Subgroup subgroup;
};

struct Job {
  std::string name;
  std::vector<int> generator_ids;  // element id of g1, g2, ... as written
  CoverDatum datum;
  std::vector<NamedSubgroup> subgroups;
  std::vector<std::string> curve_names;
  std::vector<std::string> curve_words;  // parsed against the datum on use
  JobOptions options;

  const FiniteGroup& group() const { return datum.g(); }
};

/// Reads a job document. Errors are ValidationError (or CapExceeded for the
/// group cap) with the JSON pointer of the offending field in the message.
Job parse_job(const Json& doc, const Overrides& overrides = {});
Job load_job(const std::filesystem::path& path, const Overrides& overrides = {});

/// Parses an element: "e", a word "g1 g2^-1" in the document generators, a
/// cycle string "(1 2)(3 4)", or a 1-based image list.
int parse_element(const Json& value, const FiniteGroup& group, const std::vector<int>& generator_ids,
                  const std::string& pointer);

const std::vector<std::string>& subcommands();

/// Report of one subcommand as a JSON value. Throws the library exceptions.
Json run_report(const std::string& subcommand, const Job& job);

/// Human-readable rendering of a report.
std::string render_text(const Json& report);

struct Outcome {
  int exit_code = kOk;
  Json report;        // null on error
  std::string error;  // diagnostic on error
};

/// Loads and runs one document, mapping exceptions to exit codes.
Outcome run_file(const std::string& subcommand, const std::filesystem::path& path, const Overrides& overrides);

/// Entry point of the command-line tool.
int main(int argc, char** argv);

}  // namespace gsurf::cli
