#ifndef COLPART_COLPART_HPP_
#define COLPART_COLPART_HPP_

#include "colpart/category.hpp"
#include "colpart/certificates.hpp"
#include "colpart/classifier.hpp"
#include "colpart/cyclotomic.hpp"
#include "colpart/delta.hpp"
#include "colpart/enumerate.hpp"
#include "colpart/errors.hpp"
#include "colpart/io.hpp"
#include "colpart/matrix_group.hpp"
#include "colpart/named.hpp"
#include "colpart/partition.hpp"
#include "colpart/relations.hpp"
#include "colpart/verify.hpp"

#endif  // COLPART_COLPART_HPP_
