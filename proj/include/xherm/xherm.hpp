#ifndef XHERM_XHERM_HPP
#define XHERM_XHERM_HPP

#include "xherm/asymptotics.hpp"
#include "xherm/bigfloat.hpp"
#include "xherm/eval.hpp"
#include "xherm/exceptional.hpp"
#include "xherm/gcd.hpp"
#include "xherm/hermite.hpp"
#include "xherm/int_poly.hpp"
#include "xherm/partition.hpp"
#include "xherm/quadrature.hpp"
#include "xherm/roots.hpp"
#include "xherm/sturm.hpp"
#include "xherm/verify.hpp"
#include "xherm/wronskian.hpp"

#endif  // XHERM_XHERM_HPP
