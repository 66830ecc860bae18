#include "gcsim/access/context.h"

#include <stdexcept>
#include <string>

namespace gcsim::access {

const GroupSession& CellEnvironment::session(int group) const {
  for (const GroupSession& s : sessions) {
    if (s.group == group) return s;
  }
  throw std::out_of_range("no session for group " + std::to_string(group));
}

double UeDraws::operator()(int ue) {
  auto it = streams_.find(ue);
  if (it == streams_.end()) {
    it = streams_.emplace(ue, rngs_.stream("harq.decode", static_cast<std::uint64_t>(ue))).first;
  }
  return uniform01(it->second);
}

}  // namespace gcsim::access
