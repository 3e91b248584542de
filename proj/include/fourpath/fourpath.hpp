#ifndef FOURPATH_FOURPATH_HPP
#define FOURPATH_FOURPATH_HPP

#include "fourpath/bitset.hpp"
#include "fourpath/catalog.hpp"
#include "fourpath/decompose.hpp"
#include "fourpath/enumerate.hpp"
#include "fourpath/errors.hpp"
#include "fourpath/finders.hpp"
#include "fourpath/graph.hpp"
#include "fourpath/graph6.hpp"
#include "fourpath/iso.hpp"
#include "fourpath/lemmas.hpp"
#include "fourpath/patterns.hpp"
#include "fourpath/recognizers.hpp"
#include "fourpath/sweep.hpp"

#endif
