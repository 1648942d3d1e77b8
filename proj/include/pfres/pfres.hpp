#ifndef PFRES_PFRES_HPP
#define PFRES_PFRES_HPP

#include "pfres/field.hpp"
#include "pfres/monomial.hpp"
#include "pfres/polynomial.hpp"
#include "pfres/parser.hpp"
#include "pfres/matrix.hpp"
#include "pfres/random.hpp"
#include "pfres/groebner.hpp"
#include "pfres/hilbert.hpp"
#include "pfres/graded.hpp"
#include "pfres/syzygy.hpp"
#include "pfres/resolution.hpp"
#include "pfres/koszul.hpp"
#include "pfres/exactness.hpp"
#include "pfres/pfaffian.hpp"
#include "pfres/structure.hpp"
#include "pfres/cohomology.hpp"
#include "pfres/chartwo.hpp"

#endif  // PFRES_PFRES_HPP
