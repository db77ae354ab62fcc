#include "hypertest/rational.hpp"

namespace hypertest {

mpq_class rational_from_string(const std::string& s) {
  if (s.empty()) fail_invalid("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) fail_invalid("bad rational literal: " + s);
  if (q.get_den() == 0) fail_invalid("zero denominator in rational: " + s);
  q.canonicalize();
  return q;
}

}  // namespace hypertest
