#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace egc::cli {

/// Result of one CLI command: exit code 0 for success / a positive verdict,
/// 1 for domain-level negative results. Parse failures and domain errors are
/// thrown as egc::Error and mapped to exit codes 2 and 1 by the binary.
struct CommandResult {
  int exit_code = 0;
  std::string output;
};

CommandResult cmd_check(const std::string& graph_file);
CommandResult cmd_bounds(const std::string& graph_file, const std::string& from,
                         const std::string& to);
CommandResult cmd_synthesize(const std::string& graph_file,
                             const std::vector<std::pair<std::string, std::string>>& pairs,
                             const std::optional<std::string>& output_file);
CommandResult cmd_gadget(const std::string& graph_file, const std::string& zeta,
                         const std::optional<std::string>& output_file);
CommandResult cmd_table_to_graph(const std::string& table_file,
                                 const std::optional<std::string>& output_file);
CommandResult cmd_graph_to_rankings(const std::string& table_file,
                                    const std::optional<std::string>& output_file);
CommandResult cmd_rankings_to_table(const std::string& rankings_file, const std::string& epsilon,
                                    const std::optional<std::string>& output_file);
CommandResult cmd_decompose_cycle(const std::string& cycle_file,
                                  const std::optional<std::string>& output_file);
CommandResult cmd_membership(const std::string& graph_file, const std::string& method);
CommandResult cmd_multiway_curl(const std::string& table_file, int window,
                                const std::optional<std::string>& cycle_csv);
CommandResult cmd_condorcet_demo();

}  // namespace egc::cli
