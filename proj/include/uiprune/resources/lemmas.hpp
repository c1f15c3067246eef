// Generated by tools/embed_resources.py from data/lemmas.csv. Do not edit.
#pragma once

#include <string_view>

namespace uiprune::resources {

inline constexpr std::string_view lemmas = R"res(form,lemma
was,be
were,be
been,be
being,be
am,be
is,be
are,be
has,have
had,have
having,have
does,do
did,do
done,do
doing,do
went,go
gone,go
goes,go
going,go
got,get
gotten,get
gets,get
getting,get
made,make
making,make
makes,make
took,take
taken,take
taking,take
takes,take
came,come
coming,come
comes,come
saw,see
seen,see
sees,see
gave,give
given,give
giving,give
gives,give
knew,know
known,know
thought,think
told,tell
found,find
said,say
says,say
kept,keep
left,leave
leaving,leave
felt,feel
brought,bring
bought,buy
began,begin
begun,begin
ran,run
running,run
wrote,write
written,write
writing,write
ate,eat
eaten,eat
broke,break
broken,break
chose,choose
chosen,choose
forgot,forget
forgotten,forget
froze,freeze
frozen,freeze
hid,hide
hidden,hide
lost,lose
losing,lose
meant,mean
paid,pay
sent,send
spent,spend
stood,stand
understood,understand
won,win
winning,win
wore,wear
worn,wear
shown,show
fell,fall
fallen,fall
held,hold
led,lead
built,build
sold,sell
caught,catch
taught,teach
fought,fight
slept,sleep
swore,swear
sworn,swear
drove,drive
driven,drive
rode,ride
ridden,ride
rose,rise
risen,rise
spoke,speak
spoken,speak
stole,steal
stolen,steal
threw,throw
thrown,throw
grew,grow
grown,grow
drew,draw
drawn,draw
flew,fly
flown,fly
shook,shake
shaken,shake
hung,hang
dug,dig
stuck,stick
struck,strike
children,child
men,man
women,woman
people,person
feet,foot
teeth,tooth
mice,mouse
better,good
best,good
worse,bad
worst,bad
data,data
media,media
decide,decide
use,use
update,update
delete,delete
remove,remove
share,share
save,save
hate,hate
love,love
like,like
make,make
type,type
close,close
create,create
change,change
move,move
manage,manage
continue,continue
receive,receive
require,require
include,include
improve,improve
provide,provide
solve,solve
store,store
restore,restore
force,force
produce,produce
purchase,purchase
release,release
feature,feature
issue,issue
page,page
message,message
image,image
file,file
profile,profile
phone,phone
mode,mode
zone,zone
case,case
note,note
title,title
time,time
size,size
line,line
name,name
tone,tone
value,value
scale,scale
rate,rate
rule,rule
site,site
state,state
vote,vote
code,code
user,user
guide,guide
drive,drive
care,care
hope,hope
lose,lose
free,free
live,live
die,die
tie,tie
lie,lie
freeze,freeze
choose,choose
come,come
take,take
give,give
write,write
ride,ride
hide,hide
smile,smile
cause,cause
complete,complete
compute,compute
configure,configure
disable,disable
enable,enable
analyse,analyse
analyze,analyze
organize,organize
prefer,prefer
refuse,refuse
reduce,reduce
replace,replace
resolve,resolve
schedule,schedule
select,select
separate,separate
sense,sense
serve,serve
shape,shape
skate,skate
slide,slide
trade,trade
sure,sure
unique,unique
upgrade,upgrade
rotate,rotate
pause,pause
notice,notice
introduce,introduce
irritate,irritate
annoy,annoy
add,add
install,install
uninstall,uninstall
need,need
feed,feed
speed,speed
call,call
fill,fill
kill,kill
poll,poll
roll,roll
scroll,scroll
tell,tell
sell,sell
spell,spell
fall,fall
pull,pull
stall,stall
troll,troll
miss,miss
pass,pass
press,press
access,access
address,address
process,process
dress,dress
kiss,kiss
toss,toss
buzz,buzz
fizz,fizz
jazz,jazz
fuss,fuss
bless,bless
guess,guess
discuss,discuss
cross,cross
stress,stress
express,express
success,success
less,less
mess,mess
boss,boss
glass,glass
class,class
thing,thing
nothing,nothing
something,something
anything,anything
everything,everything
morning,morning
evening,evening
setting,setting
ring,ring
king,king
wing,wing
string,string
spring,spring
bring,bring
sing,sing
sting,sting
swing,swing
cling,cling
fling,fling
sling,sling
during,during
ceiling,ceiling
building,building
wedding,wedding
pudding,pudding
always,always
perhaps,perhaps
various,various
previous,previous
status,status
bonus,bonus
plus,plus
yes,yes
news,news
ios,ios
gps,gps
sms,sms
series,series
lens,lens
bus,bus
gas,gas
this,this
thus,thus
his,his
its,its
us,us
bias,bias
canvas,canvas
atlas,atlas
chaos,chaos
focus,focus
virus,virus
campus,campus
census,census
corpus,corpus
genius,genius
minus,minus
radius,radius
surplus,surplus
tennis,tennis
basis,basis
crisis,crisis
analysis,analysis
axis,axis
thesis,thesis
emphasis,emphasis
chassis,chassis
christmas,christmas
lyrics,lyrics
physics,physics
maths,maths
mathematics,mathematics
statistics,statistics
analytics,analytics
graphics,graphics
electronics,electronics
politics,politics
economics,economics
species,species
bed,bed
red,red
seed,seed
weed,weed
shed,shed
bleed,bleed
breed,breed
greed,greed
embed,embed
settings,setting
things,thing
buildings,building
strings,string
rings,ring
wings,wing
kings,king
weddings,wedding
mornings,morning
evenings,evening
ceilings,ceiling
buses,bus
viruses,virus
analyses,analysis
crises,crisis
lenses,lens
bonuses,bonus
statuses,status
cookies,cookie
movies,movie
used,use
hundred,hundred
bored,bored
wipe,wipe
erase,erase
amaze,amaze
swipe,swipe
fire,fire
)res";

}  // namespace uiprune::resources
