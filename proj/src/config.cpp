#include "tropbasis/config.hpp"

#include <thread>

namespace trop {

int ExecConfig::resolve_jobs() const {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace trop
