#include "cubik/theta.hpp"

namespace cubik {

std::string render_theta_report(const std::vector<ThetaReportLine>& lines) {
  std::ostringstream os;
  for (const ThetaReportLine& l : lines)
    os << "theta m=" << l.m << " n=" << l.n << " id=T" << l.id << " checked=" << l.checked
       << " failed=" << l.failed << "\n";
  return os.str();
}

}  // namespace cubik
