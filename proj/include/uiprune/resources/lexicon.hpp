// Generated by tools/embed_resources.py from data/lexicon.csv. Do not edit.
#pragma once

#include <string_view>

namespace uiprune::resources {

inline constexpr std::string_view lexicon = R"res(term,polarity,subjectivity
great,0.8,0.75
excellent,0.8,0.75
amazing,0.8,0.75
awesome,0.8,0.75
fantastic,0.8,0.75
wonderful,0.8,0.75
superb,0.8,0.75
brilliant,0.8,0.75
outstanding,0.8,0.75
perfect,0.8,0.75
love,0.7,0.7
lovely,0.7,0.7
beautiful,0.7,0.7
gorgeous,0.7,0.7
delightful,0.7,0.7
impressive,0.7,0.7
incredible,0.7,0.7
terrific,0.7,0.7
marvelous,0.7,0.7
fabulous,0.7,0.7
good,0.6,0.6
nice,0.6,0.6
cool,0.6,0.6
helpful,0.6,0.6
useful,0.6,0.6
handy,0.6,0.6
smooth,0.6,0.6
fast,0.6,0.6
quick,0.6,0.6
reliable,0.6,0.6
stable,0.6,0.6
intuitive,0.6,0.6
elegant,0.6,0.6
clean,0.6,0.6
polished,0.6,0.6
solid,0.6,0.6
sleek,0.6,0.6
responsive,0.6,0.6
convenient,0.6,0.6
efficient,0.6,0.6
enjoyable,0.6,0.6
pleasant,0.6,0.6
fun,0.6,0.6
like,0.5,0.55
enjoy,0.5,0.55
recommend,0.5,0.55
appreciate,0.5,0.55
satisfy,0.5,0.55
happy,0.5,0.55
glad,0.5,0.55
pleased,0.5,0.55
thank,0.5,0.55
thanks,0.5,0.55
thankful,0.5,0.55
fine,0.5,0.55
easy,0.5,0.55
simple,0.5,0.55
clear,0.5,0.55
neat,0.5,0.55
decent,0.5,0.55
worth,0.5,0.55
favorite,0.5,0.55
favourite,0.5,0.55
better,0.4,0.5
improve,0.4,0.5
improved,0.4,0.5
improvement,0.4,0.5
fix,0.4,0.5
fixed,0.4,0.5
work,0.4,0.5
working,0.4,0.5
usable,0.4,0.5
accurate,0.4,0.5
consistent,0.4,0.5
powerful,0.4,0.5
flexible,0.4,0.5
customizable,0.4,0.5
lightweight,0.4,0.5
informative,0.4,0.5
okay,0.3,0.4
ok,0.3,0.4
alright,0.3,0.4
fair,0.3,0.4
adequate,0.3,0.4
acceptable,0.3,0.4
reasonable,0.3,0.4
sufficient,0.3,0.4
functional,0.3,0.4
new,0.2,0.3
updated,0.2,0.3
fresh,0.2,0.3
modern,0.2,0.3
free,0.2,0.3
available,0.2,0.3
compatible,0.2,0.3
safe,0.2,0.3
secure,0.2,0.3
terrible,-0.8,0.8
horrible,-0.8,0.8
awful,-0.8,0.8
worst,-0.8,0.8
useless,-0.8,0.8
garbage,-0.8,0.8
trash,-0.8,0.8
crap,-0.8,0.8
pathetic,-0.8,0.8
disgusting,-0.8,0.8
atrocious,-0.8,0.8
abysmal,-0.8,0.8
hate,-0.7,0.75
hateful,-0.7,0.75
stupid,-0.7,0.75
ridiculous,-0.7,0.75
unusable,-0.7,0.75
broken,-0.7,0.75
junk,-0.7,0.75
rubbish,-0.7,0.75
dreadful,-0.7,0.75
miserable,-0.7,0.75
bad,-0.6,0.65
poor,-0.6,0.65
annoy,-0.6,0.65
annoying,-0.6,0.65
annoyed,-0.6,0.65
frustrate,-0.6,0.65
frustrating,-0.6,0.65
frustrated,-0.6,0.65
disappoint,-0.6,0.65
disappointing,-0.6,0.65
disappointed,-0.6,0.65
irritate,-0.6,0.65
irritating,-0.6,0.65
angry,-0.6,0.65
mad,-0.6,0.65
upset,-0.6,0.65
ugly,-0.6,0.65
slow,-0.5,0.55
laggy,-0.5,0.55
lag,-0.5,0.55
buggy,-0.5,0.55
bug,-0.5,0.55
crash,-0.5,0.55
freeze,-0.5,0.55
glitch,-0.5,0.55
glitchy,-0.5,0.55
unstable,-0.5,0.55
unreliable,-0.5,0.55
clunky,-0.5,0.55
confusing,-0.5,0.55
confuse,-0.5,0.55
cumbersome,-0.5,0.55
clumsy,-0.5,0.55
awkward,-0.5,0.55
fail,-0.5,0.5
failure,-0.5,0.5
error,-0.5,0.5
problem,-0.5,0.5
issue,-0.5,0.5
wrong,-0.5,0.5
missing,-0.5,0.5
lose,-0.5,0.5
lost,-0.5,0.5
waste,-0.5,0.5
wasted,-0.5,0.5
drain,-0.5,0.5
draining,-0.5,0.5
spam,-0.5,0.5
spammy,-0.5,0.5
intrusive,-0.5,0.5
invasive,-0.5,0.5
difficult,-0.4,0.45
hard,-0.4,0.45
complicated,-0.4,0.45
complex,-0.4,0.45
tedious,-0.4,0.45
boring,-0.4,0.45
dull,-0.4,0.45
outdated,-0.4,0.45
obsolete,-0.4,0.45
pointless,-0.4,0.45
unnecessary,-0.4,0.45
redundant,-0.4,0.45
bloat,-0.4,0.45
bloated,-0.4,0.45
clutter,-0.4,0.45
cluttered,-0.4,0.45
weird,-0.3,0.4
strange,-0.3,0.4
odd,-0.3,0.4
unclear,-0.3,0.4
limited,-0.3,0.4
lacking,-0.3,0.4
lack,-0.3,0.4
meh,-0.3,0.4
mediocre,-0.3,0.4
average,-0.3,0.4
inconsistent,-0.3,0.4
uninstall,-0.6,0.6
refund,-0.6,0.6
delete,-0.6,0.6
remove,-0.6,0.6
ditch,-0.6,0.6
quit,-0.6,0.6
abandon,-0.6,0.6
regret,-0.6,0.6
scam,-0.7,0.7
fraud,-0.7,0.7
steal,-0.7,0.7
cheat,-0.7,0.7
ripoff,-0.7,0.7
rip,-0.7,0.7
expensive,-0.4,0.5
overpriced,-0.4,0.5
costly,-0.4,0.5
pricey,-0.4,0.5
cheap,0.5,0.5
affordable,0.5,0.5
ad,-0.3,0.35
ads,-0.3,0.35
advert,-0.3,0.35
popup,-0.3,0.35
)res";

}  // namespace uiprune::resources
