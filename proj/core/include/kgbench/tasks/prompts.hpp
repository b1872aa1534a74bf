#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace kgbench::tasks {

// A prompt template compiled in from assets/prompts/<id>.txt.
struct PromptTemplate {
  std::string_view id;  // e.g. "turtle-fix.v1"
  std::string_view text;
};

const std::vector<PromptTemplate>& PromptTemplates();
// Throws kgbench::Error for unknown ids.
const PromptTemplate& GetPromptTemplate(std::string_view id);

// Replaces every {{name}} with vars[name]; unknown placeholders throw.
std::string RenderTemplate(std::string_view text, const std::map<std::string, std::string>& vars);

}  // namespace kgbench::tasks
