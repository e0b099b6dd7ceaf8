// Copyright 2026 The Webskill Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "webskill/llm/prompts.hpp"

#include <algorithm>

#include "webskill/dsl/primitives.hpp"

namespace webskill::llm {

const std::string_view kJudgeInstructions =
    R"(You are an expert in evaluating the performance of a web navigation agent. The agent is designed to help a human user navigate a website to complete a task. Given the user's intent, the agent's action history, the final state of the webpage, and the agent's response to the user, your goal is to decide whether the agent's execution is successful or not. Please be careful of each detail and strict about the evaluation process.

There are three types of tasks:
1. Information seeking: The user wants to obtain certain information from the webpage, such as the information of a product, reviews, map info, comparison of map routes, etc. The bot's response must contain the information the user wants, or explicitly state that the information is not available. Otherwise, e.g. the bot encounters an exception and respond with the error content, the task is considered a failure. Besides, be careful about the sufficiency of the agent's actions. For example, when asked to list the top-searched items in a shop, the agent should order the items by the number of searches, and then return the top items. If the ordering action is missing, the task is likely to fail.
2. Site navigation: The user wants to navigate to a specific page. Carefully examine the bot's action history and the final state of the webpage to determine whether the bot successfully completes the task. No need to consider the bot's response.
3. Content modification: The user wants to modify the content of a webpage or configuration. Carefully examine the bot's action history and the final state of the webpage to determine whether the bot successfully completes the task. No need to consider the bot's response.

*IMPORTANT*
Please be strict about the evaluation process.
Format your response into two lines as shown below:

Thoughts: <your thoughts and reasoning process>

Status: "success" or "failure")";

const std::string_view kCleanerInstructions =
    R"(You are a helpful assistant in summarizing web browsing actions. Your task is to summarize the main action taken and the corresponding state change, from the input thought process and environmental description. 

Example input: 
'''Let me think about this step by step:
1) I've clicked the Columns button and based on the accessibility tree, I can now see a list of available columns that can be shown/hidden.
2) Looking through the available columns in the accessibility tree, I don't see any direct column for "Number of Orders" or similar metric.
3) Since I don't see the information I need in the available columns, this suggests that:
   - Either this information is available through a different path
   - Or we need to access the Sales/Orders section to correlate this information
4) The most logical path would be to:
   - Go to the Sales section where we can see all orders
   - And then analyze which customers have the most orders
5) From the accessibility tree, I can see the "SALES" link with bid "183" in the main navigation.

Let me click on the SALES link:
This should open the Sales menu where we can access the Orders section to analyze customer order histories.'''
 
Example output:
'''Clicked the SALES link to access the Orders section for customer order histories.''')";

const std::string_view kInducerInstructions =
    R"(You are a proficient software engineer. Your task is to (1) summarize reusable functions as APIs from the provided action trajectories, and (2) rewrite the trajecoties using the reusable functions you generated in (1).

For (1), from the provided examples about the same task, you job is to generate Python functions that can be reused to solve (part of) these tasks.
The functions should have mediocre complexity: (i) containing at least three actions and not too simple (e.g., a single line of code), (ii) not too complex (e.g., more than 10 lines of code), and should be general enough to be applied to other similar tasks. The arguments to these functions should be common variables (such as strings and lists), avoid using complex inputs such as another function.

The actions you can use are:
'click', 'fill', 'hover', 'keyboard_press', 'scroll';
'tab_focus', 'new_tab', 'tab_close', 'go_back', 'go_forward';
'send_msg_to_user', 'report_infeasible', 'select_option'.
Do not use other undefined actions. Do not include any try-except blocks in the functions.

Please include 'Args', 'Returns', and 'Examples' in the function documentation.

For (2), write the instruction and rewritten code of each example. Do not include the answer response or example-specific information in the rewritten code.
Pay attention to whether all link IDs are available before specifying them in the generated functions.
If you use `send_msg_to_user`, make sure the message is decided within the function, instead of provided as an argument.

Make sure each function contains no less than 2 steps, and no more than 5 steps; to keep the functions simple and task-oriented.
You can generate zero, one, or multiple functions depending on the provided examples.)";

namespace {

void require(bool present, const char* field) {
  if (!present) throw MissingField(field);
}

std::string indent(std::string_view text, std::string_view prefix) {
  std::string out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty()) out.append(prefix);
    out.append(line);
    out += '\n';
    start = end + 1;
  }
  return out;
}

std::vector<const dsl::SkillProgram*> sorted(std::vector<const dsl::SkillProgram*> skills) {
  std::sort(skills.begin(), skills.end(), [](auto* a, auto* b) { return a->name < b->name; });
  return skills;
}

}  // namespace

std::string render_action_space(const std::vector<const dsl::SkillProgram*>& skills) {
  std::string out;
  for (const auto& sig : dsl::primitive_table()) {
    out += "- " + sig.signature_text() + ": " + std::string(sig.description) + "\n";
  }
  for (const auto* s : sorted(skills)) {
    out += "- " + s->signature() + "\n";
    if (!s->docstring.empty()) out += indent(s->docstring, "    ");
  }
  return out;
}

std::string render_policy_prompt(const PolicyContext& ctx) {
  require(!ctx.query.empty(), "query");
  require(!ctx.current_url.empty(), "current_url");
  std::string out;
  out += "You are a web agent that completes the user's goal by issuing one action at a time.\n\n";
  out += "# Goal\n" + ctx.query + "\n\n";
  out += "# Action space\nYou may call exactly one of the following per turn.\n";
  out += render_action_space(ctx.skills);
  if (!ctx.memory.empty()) {
    out += "\n# Memory\n";
    for (const auto& m : ctx.memory) out += m + (m.ends_with('\n') ? "" : "\n") + "\n";
  }
  std::size_t total = ctx.history.size() + 1;
  std::size_t first_full = total > kFullObservations ? total - kFullObservations : 0;
  if (!ctx.history.empty()) {
    out += "\n# History\n";
    for (std::size_t i = 0; i < ctx.history.size(); ++i) {
      const auto& h = ctx.history[i];
      out += "## Step " + std::to_string(i + 1) + "\n";
      out += "URL: " + h.url + "\n";
      if (i >= first_full) out += "Observation:\n" + h.observation;
      if (!h.thought.empty()) out += "Thought: " + h.thought + "\n";
      out += "Action: " + h.action + "\n";
      out += "Outcome: " + h.outcome + "\n";
    }
  }
  out += "\n# Current page\nURL: " + ctx.current_url + "\n" + ctx.current_observation;
  out += "\nThink step by step, then give your next action as a single call in a fenced code block.\n";
  return out;
}

std::string render_judge_prompt(const JudgeContext& ctx) {
  require(!ctx.query.empty(), "query");
  std::string out(kJudgeInstructions);
  out += "\n\nUser Intent: " + ctx.query + "\n\nAction History:\n";
  if (ctx.actions.empty()) out += "(no actions)\n";
  for (std::size_t i = 0; i < ctx.actions.size(); ++i) {
    out += std::to_string(i + 1) + ". " + ctx.actions[i] + "\n";
  }
  out += "\nThe final state of the webpage:\n" + ctx.final_observation;
  out += "\nBot response to the user: " + ctx.final_message.value_or("N/A") + "\n";
  return out;
}

std::string render_cleaner_prompt(std::string_view thought) {
  require(!thought.empty(), "thought");
  std::string out(kCleanerInstructions);
  out += "\n\nInput:\n'''" + std::string(thought) + "'''\n\nOutput:\n";
  return out;
}

std::string render_inducer_prompt(const InducerContext& ctx) {
  require(!ctx.query.empty(), "query");
  require(!ctx.steps.empty(), "steps");
  std::string out(kInducerInstructions);
  auto library = sorted(ctx.library);
  if (!library.empty()) {
    out += "\n\nFunctions that already exist and may be called in the rewritten code:\n";
    for (const auto* s : library) {
      out += "- " + s->signature() + "\n";
      if (!s->docstring.empty()) out += indent(s->docstring, "    ");
    }
  }
  out += "\n\n## Example 1\nQuery: " + ctx.query + "\nActions:\n```\n";
  for (const auto& step : ctx.steps) {
    if (!step.thought.empty()) out += "# " + step.thought + "\n";
    out += step.action + "\n";
  }
  out += "```\n";
  return out;
}

}  // namespace webskill::llm
