#include "kgbench/tasks/prompts.hpp"

#include "kgbench/error.hpp"

namespace kgbench::tasks {

const std::vector<PromptTemplate>& PromptTemplates() {
  static const std::vector<PromptTemplate> kTemplates = {
#include "kgbench/prompt_assets.inc"
  };
  return kTemplates;
}

const PromptTemplate& GetPromptTemplate(std::string_view id) {
  for (const auto& t : PromptTemplates()) {
    if (t.id == id) return t;
  }
  throw Error("unknown prompt template '" + std::string(id) + "'");
}

std::string RenderTemplate(std::string_view text, const std::map<std::string, std::string>& vars) {
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t open = text.find("{{", pos);
    if (open == std::string_view::npos) {
      out.append(text.substr(pos));
      break;
    }
    std::size_t close = text.find("}}", open + 2);
    if (close == std::string_view::npos) throw Error("unterminated placeholder in template");
    out.append(text.substr(pos, open - pos));
    std::string name(text.substr(open + 2, close - open - 2));
    auto it = vars.find(name);
    if (it == vars.end()) throw Error("no value for template placeholder '" + name + "'");
    out += it->second;
    pos = close + 2;
  }
  return out;
}

}  // namespace kgbench::tasks
