#!/usr/bin/env python3
"""Regenerate the packaged word list.

The default vocabulary is the union of a base list of common English words
and every word of the packaged corpus and reference passage, each in its
original, lowercase, and capitalized forms. Run from the repository root:

    python scripts/build_wordlist.py
"""
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from clsec import data  # noqa: E402
from clsec.textcodec import strip_message  # noqa: E402

BASE_WORDS = """
a b c d e f g h i j k l m n o p q r s t u v w x y z
an as at be by do go he if in is it me my no of on or so to up us we
ace act add age ago aid aim air all and any ape arc are arm art ash ask ate
awe axe bad bag ban bar bat bay bed bee beg bet bid big bit bow box boy bud
bug bun bus but buy cab can cap car cat cow cry cup cut dam day den dew did
die dig dim dip dog dot dry due dug ear eat egg ego end era eve eye fan far
fat fee few fig fin fit fix flu fly foe fog for fox fun fur gap gas gem get
got gum gun gut guy had ham has hat hay hen her hey hid him hip his hit hop
hot how hub hue hug hut ice ill ink inn ion its jam jar jaw jet job jog joy
key kid kin kit lab lag lap law lay leg let lid lie lip lit log lot low mad
man map mat may men met mix mob mud mug nap net new nod nor not now nut oak
oar odd off oil old one orb ore our out owe owl own pad pan par paw pay pea
pen pet pie pig pin pit ply pod pot pro pub put rag ram ran rat raw ray red
rib rid rim rip rob rod rot row rub rug run rut sad sat saw say sea see set
sew she shy sin sip sir sit six ski sky sly son sow spy sum sun tab tan tap
tar tax tea ten the thy tie tin tip toe ton too top tow toy try tub tug two
use van vat vow war was wax way web wed wet who why wig win wit woe won wood
yes yet you zoo
able acid aged ails airy also area army atom aunt away axis baby back bail
bait bake bald ball band bank bare bark barn base bath bead beak beam bean
bear beat been beer bell belt bend bent best bike bill bird bite blew blow
blue boat body boil bold bolt bond bone book boot bore born both bowl brew
brim brow bulk bull burn bury busy cage cake calf call calm came camp cane
card care cart case cash cast cave cell cent chat chef chew chin chip chop
cite city clad claw clay clip club clue coal coat code coil coin cold colt
comb come cone cook cool cope copy cord core cork corn cost cosy cove crab
crew crop crow cube curb cure curl dame damp dare dark darn dart dash data
date dawn days dead deaf deal dear debt deck deed deep deer dent deny desk
dial dice died diet dirt dish dive dock does dole dome done doom door dose
dove down drag draw drew drip drop drum dual duck dude duel dull dumb dune
dusk dust duty each earl earn ease east easy echo edge edit eggs else envy
epic even ever evil exam exit face fact fade fail fair fake fall fame farm
fast fate fear feat feed feel fell felt fern fill film find fine fire firm
fish fist five flag flat flaw fled flee flew flex flip flow foal foam fold
folk fond food fool foot ford fore fork form fort foul four fowl free fret
frog from fuel full fund fury fuse gain gale game gang gate gave gaze gear
gift gild girl give glad glee glen glow glue goal goat goes gold golf gone
good gown grab gran gray grew grey grid grim grip grow gulf gust hail hair
half hall halt hand hang hard hare harm harp hate haul have hawk haze head
heal heap hear heat heed heel heir held hell helm help herb herd here hero
hers hide high hike hill hind hint hire hive hold hole holy home hone hood
hoof hook hope horn hose host hour howl huge hull hung hunt hurt hush idea
idle idol inch into iron isle item jail jest join joke jolt jury just keel
keen keep kelp kept kick kind king kiss kite knee knew knit knob knot know
lace lack lady laid lake lamb lame lamp land lane last late lawn lazy lead
leaf lean leap left lend lens lent less lest life lift like limb lime line
link lion list live load loaf loan lock loft lone long look loom loop lord
lore lose loss lost loud love luck lull lump lung lure lush lute made maid
mail main make male mall malt many mare mark mash mask mass mast mate maze
meal mean meat meek meet melt mend mere mesh mess mice mild mile milk mill
mind mine mint miss mist mite moan moat mock mode mold mole monk mood moon
more morn moss most moth move much mule muse must mute myth nail name navy
near neat neck need nest news next nice nine node none noon nose note noun
null oath obey oboe odds ogre oily okay omen once only onto ooze opal open
oral ours oven over pace pack page paid pail pain pair pale palm pane park
part pass past path pave pawn peak pear peat peck peek peel peer pelt pest
pick pier pike pile pill pine pink pint pipe plan play plea plot plow ploy
plug plum plus poem poet pole poll pond pony pool poor pore pork port pose
post pour pray prey prop pull pulp pump pure push quit quiz race rack raft
rage raid rail rain rake rang rank rare rash rate rays read real reap rear
reed reef reel rein rely rent rest rice rich ride rift ring ripe rise risk
rite road roam roar robe rock rode role roll roof rook room root rope rose
rude rung runs ruse rush rust safe saga sage said sail sake sale salt same
sand sane sang sash save scan scar seal seam seas seat sect seed seek seem
seen self sell send sent shed ship shoe shop shot show shut side sign silk
sill sing sink site size skin slab slew slid slim slip slot slow snap snow
soak soap soar sock soft soil sold sole some song soon sore sort soul soup
sour sown span spar sped spin spot spun spur stag star stay stem step stew
stir stop stow stub such suit sung sunk sure swam swan swap sway swim tack
tail take tale talk tall tame tank tape task team tear tell tend tent term
test text than that them then they thin this thou thud thus tick tide tidy
tier tile till tilt time tiny toad toil told toll tomb tone took tool torn
toss tour town trap tray tree trek trim trio trip trod true tuck tune turf
turn twig twin type ugly undo unit upon urge used user vain vane vase vast
veil vein vent verb very vest view vine void volt vote wade wage wait wake
walk wall wand want ward ware warm warn wars wary wash wasp wave ways weak
wear weed week weep well went were west what when whim whip whom wide wife
wild will wind wine wing wink wipe wire wise wish with wolf wood wool word
wore work worm worn wove wrap wren yard yarn yawn year yoke your zeal zero
zone
about above abuse actor acute adapt added admit adopt after again agent
agree ahead aisle alarm album alert alike alive alley allow alloy alone
along aloud alter amber amble amend among ample angel anger angle ankle
annoy anvil apart apple apply apron arbor ardor arena argue arise armor
aroma arose array arrow ashes aside asked aspen asset atlas attic audio
avail avoid await awake award aware awful bacon badge baker balmy banjo
barge basic basin batch beach beads beard beast began begin begun being
belly below bench berry birch birds birth black blade blame bland blank
blast blaze bleak blend bless blind bliss block bloom blown blunt blush
board boast bonus booth borne bound brace braid brain brake brand brass
brave bread break breed brick bride brief brine bring brink brisk broad
broke brook broom brown brush build built bulky bunch burnt burst cabin
cable cadet camel canal candy canoe cargo carry carve catch cause cease
cedar chain chair chalk charm chart chase cheap check cheek cheer chess
chest chief child chill choir choke chord chose cider cigar civic civil
claim clash clasp class clean clear clerk click cliff climb cling cloak
clock close cloth cloud clove clown coach coast cocoa colon color comet
comic coral corps couch could count court cover crack craft crane crash
crate crawl craze cream creed creek creep crept crest crime crisp cross
crowd crown crude cruel crumb crush crust curve cycle daily dairy daisy
dance dated dealt death debut decay decor decoy delay delta dense depot
depth derby deter devil diary dirty ditch diver dizzy dodge doing donor
doubt dough dozen draft drain drake drama drank drawn dread dream dress
dried drift drill drink drive drone drove drown dryly duchy dusty dwarf
dwell dying eager eagle early earth easel eaten edict eerie eight elbow
elder elect elite elude ember empty enact ended endow enemy enjoy enter
entry envoy equal erase erect erode error erupt essay ethic evade event
every evoke exact exert exile exist expel extra fable faced faint fairy
faith false fancy fatal fault favor feast fence ferry fetch fever fiber
field fiend fifty fight final first fjord flair flake flame flank flash
fleet flesh flick flier fling flint float flock flood floor flour flown
fluid flung flush flute foamy focus foggy folly force forge forth forty
forum found frame fraud fresh fried front frost froth frown froze fruit
fully fungi funny gauge gaunt gavel gears geese genre ghost giant given
glade gland glass glaze gleam glide globe gloom glory gloss glove gnome
going goose gorge grace grade grain grand grant grape graph grasp grass
grave graze great greed green greet grief grill grind groan groin groom
grope gross group grove grown growl gruel guard guess guest guide guild
guilt gulch gully habit hands handy happy hardy harsh haste hasty hatch
haven havoc hazel heard heart heath heave heavy hedge hefty heron hills
hinge hoard hobby hoist holly homes honey honor horde horse hotel hound
house hover human humid humor hurry hutch icily ideal image imply inert
inlet inner input irony issue ivory jelly jetty jewel joint jolly judge
juice kayak kneel knelt knife knock known label labor laden lance large
larva latch later lathe laugh layer leaky learn lease leash least leave
ledge lemon level lever light liked limit linen liner lingo lithe lived
liver livid llama lobby local lodge lofty logic loose lorry loser lotus
lousy loved lover lower loyal lucid lucky lumpy lunar lunch lurch lying
madly magic major maker mango manor maple march marsh mason match maybe
mayor meant medal media melon mercy merge merit merry metal meter midst
might mince miner minor minus mirth miser mixed model moist molar moldy
money month moral morse mossy motor mound mount mourn mouse mouth moved
mover movie mower muddy mural music musty naive naked nasal nasty naval
navel needs nerve never newer newly night noble noise noisy north notch
noted novel nurse nylon oaken oasis occur ocean offer often olive omega
onion opera orbit order organ other otter ought ounce outer ovary overt
owing owner oxide ozone paint panel panic paper parch parka parse party
pasta paste patch patio pause peace peach pearl pedal penny perch peril
petal phase phone photo piano piece piety pilot pinch pivot pixel place
plaid plain plane plank plant plate plaza plead pluck plume plump point
poise polar pond pools porch pouch pound power press price pride prime
print prior prism prize probe prone proof prose proud prove prowl prune
pulse punch pupil puppy purse quail qualm quart queen query quest queue
quick quiet quill quilt quirk quite quota quote rabid radar radio rainy
raise rally ranch range rapid ratio raven razor reach react ready realm
rebel recur refer reign relax relay relic remit renew repay reply rerun
reset resin retry revel rider ridge rifle right rigid rigor rinse ripen
risen risky rival river roast robin robot rocky rogue roost rotor rough
round route rover royal rugby ruler rumor rural rusty sadly salad sally
salon salsa salty sandy sauce saute saved savor scale scalp scant scarf
scene scent scoop scope score scorn scout scrap screw scrub seize sense
serve seven sever shade shaft shake shale shall shame shape share sharp
shave shawl shear sheen sheep sheer sheet shelf shell shine shiny shire
shirt shoal shock shone shook shoot shore short shout shove shown showy
shrub shrug sieve sight sigma silly since sinew siren sixth sixty skiff
skill skirt slate slave sleek sleep sleet slept slice slide slime sling
slope sloth small smart smash smell smelt smile smoke snack snail snake
snare sneak snore snout sober solar solid solve sonar sonic sorry sound
south space spade spare spark spawn speak spear speed spell spend spent
spice spike spill spine spire spite split spoil spoke spoon sport spout
spray spree sprig spur squad stack staff stage stain stair stake stale
stalk stall stamp stand stare stark start state stave stead steak steal
steam steed steel steep steer stern stick stiff still sting stock stoic
stoke stone stood stool stoop store storm story stout stove strap straw
stray strip stuck study stuff stump stung style suave sugar suite sunny
super surge swarm swear sweat sweep sweet swell swept swift swine swing
swirl sword syrup table taken tally talon tamed tango taper tardy taste
tasty teach teeth tempo tenor tense tenth tepid thank theft their theme
there these thick thief thigh thing think third thorn those three threw
thrift throb throw thumb thyme tidal tiger tight timer times title toast
today token tonal tonic tooth topic torch total touch tough towel tower
toxic trace track tract trade trail train trait tramp trash tread treat
trend trial tribe trick tried trout truce truck truly trunk trust truth
tulip tumor tunic tutor twice twirl twist udder ulcer ultra uncle under
undue unfit union unite unity untie until upper upset urban usage usher
using usual utter vague valet valid value valve vapor vault vector venom
venue verge verse vigil vigor villa vinyl viola viper virus visit visor
vista vital vivid vocal vogue voice voter vouch vowel wafer wagon waist
water weary weave wedge weigh weird whale wharf wheat wheel where which
while whirl white whole whose widen widow width wield wince winch windy
wiser witch witty woman women woods woody wooly wordy world worry worse
worst worth would wound woven wrath wreck wrist write wrong wrote yacht
yearn yeast yield young youth zebra
abacus absorb accent accept access accord across action active actual
advice advise affair afford afraid agency agenda almost always amount
anchor animal annual answer anthem anyone appeal appear arcade archer
argued around arrive artist ashore asleep aspect assert assign assume
assure asylum attack attain attend august author autumn avenue awaken
awhile backed banner barrel basket batter battle beacon beauty became
become before begged behalf behave behind belief belong beside better
beware beyond bidder binder bishop bitter blazer blight bluff bodily
boiler bonnet border boring borrow bottle bottom bounce bounty boyish
branch brazen breach breast breath breeze bridge bright broken bronze
brutal bubble bucket buckle budget buffer bundle burden bureau burrow
bustle butler butter button byword cackle camera campus candle candor
cannon canopy canvas carbon career carpet carrot cartel carton casual
cattle caught causal cavern celery cellar cement census centre cereal
chance change chapel charge cheese cherry choice choose chorus chosen
church cinder circle circus clause clergy clever client climax clinic
closet cobalt coffee coffin cohort collar column combat comedy coming
common copper corner corral cosmic costly cotton county couple course
cousin covert coward cradle crayon create credit crisis critic cruise
crutch cuckoo culprit culture cupful curfew custom cymbal dagger dainty
damage danger daring dazzle dealer debate debris decade decent decide
deduce deeply defeat defect defend define deform degree delete delude
demand demure denial depart depend deploy depose derive design desire
detail detect device devise devote dictum differ digest dinghy dinner
direct dismal dispel divert divide doctor dollar domain donkey double
dragon drawer dredge drudge during duster eagles earful easily eating
editor effect effort either eleven emblem emerge empire employ encode
endure energy engine enlist enough ensure entire envied equals equity
escape estate esteem ethics evolve exceed except excess excite excuse
exempt exhale exotic expand expect expert export extend extent fabric
facade factor fallen family famine famous farmer father fathom feeble
fellow female fervor fester feudal fiddle figure filter finger finish
fiscal flavor fleece flight flimsy floral flower fluent flurry flying
fodder follow forbid forest forger forgot formal format former fossil
foster fought fourth frugal frozen future galaxy galley gallon gallop
gamble garden garlic gather gentle gentry genius github giggle ginger
girder glance glassy gloomy golden gospel gossip gotten govern grains
grassy gravel gravy grease greasy greedy grotto ground grudge guitar
gunner gutter hamlet hammer handle happen harbor hardly hazard healer
health hearth heater heaven hedger height helmet herald herbal hermit
heroic hidden hinder hollow homage honest horror hostel hotels hourly
humble hunger hungry hunter hurdle hybrid iceberg icicle ignite ignore
immune impact import impose improve incite income indeed indoor infant
inform injure injury inland inmate innate insect inside insist instep
insult intact intake intend intent invade invent invest invite inward
island itself jacket jargon jingle jockey jungle junior kennel kernel
kettle kidney kindly kindle kitten knight ladder lagoon larder lately
latent latter launch lavish lawful lawyer league ledger legacy legend
length lessen lesson letter lichen likely limber linger liquid listen
litter little lively living lizard locale locker lonely longer louder
lovely lumber luxury madder magnet maiden mainly makeup mallet mammal
manage manner mantle marble margin marine market marrow marvel master
matter mature meadow medium mellow melody member memoir memory mentor
merely merger method middle mighty mildew mingle minnow minute mirror
misery mishap mobile modern modest module moment monkey morsel mortal
mosaic mostly mother motion muffin murmur muscle museum mutton myriad
mystic narrow nation native nature nearby nearly neatly needle nephew
nestle nether nicely nickel nimble nobody normal notice notion nought
novice nozzle nuance number object oblige obtain occupy offend office
omelet oppose option orchid origin orphan outfit outlet output oyster
paddle palace parade parcel pardon parent parish parlor parrot partly
pastel pastor pasture patent patrol patron pauper pebble pencil people
pepper period permit person phrase picket picnic pierce pigeon pillar
pillow pirate pistol piston placid planet plaque player please pledge
plenty plight plough plural pocket poetry points polish pollen ponder
poorly portal postal poster potato powder praise prayer preach prefer
pretty priest prince prison profit prompt proper proven public puddle
pulley pulpit punish purely purple purpose pursue quaint quarry quiver
rabbit racket ragged raided randy random rather ration reader really
reason rebuke recall recent recipe reckon record redeem reduce refine
reform refuge refuse regain regard regime region regret relate relief
relish remain remark remedy remind remote render rental repair repeat
report rescue resent reside resign resist result resume retain retire
return reveal review revise revive reward rhythm ribbon riches rimmed
ripple rising ritual robust rocket roller roster rotate rubble rudder
ruling rumble runner rustic sacred saddle safely safety salmon sample
savage saving savory scarce scenic scheme school scorch scrape scream
screen script scroll sculpt season second secret sector secure seldom
select seller senate senior sermon settle severe shabby shadow shaken
shandy shanty shaped shears sheath shield shimmer shiver shovel shower
shrank shrewd shrine shrink shroud signal silent silver simple simply
singer single sinker sister sketch slight sliver slogan smooth smudge
snatch sneeze social socket sodden solace soldier solely solemn solid
sonnet sooner sorrow sought source sparse speech sphere spider spinal
spirit splash spoken sponge spread spring sprout squall square squash
squeak squeal stable stanza staple starch statue status steady stealth
stitch stolen strain strand streak stream street stress strict stride
strife strike string stripe strive stroke stroll strong struck stucco
studio sturdy subtle sudden suffer summer summit sunken superb supper
supply surely survey switch symbol system tablet tackle tactic tailor
talent tariff tavern teapot tedium temper temple tenant tender tennis
tenure thatch theory thirst thirty thorax thread thrive throne through
thrown thrust timber tingle tomato tongue tonsil toward traced tragic
trench trivia trophy trough trowel truant tumble tunnel turban turkey
turnip turret tweeze twelve twenty unable uneasy unfold unique unrest
untold update upheld uphill upkeep uproar upward urgent useful vacant
vacuum valley vanish vapour varied vassal vendor verify vessel victim
victor violet violin virtue vision visual volume voyage wander wealth
weapon weasel weekly welded wicked wicker widely window winter wisdom
wished within wizard wonder wooden worker worthy wreath wrench writer
yellow yonder zenith zephyr zigzag
ability absence academy account accused achieve acquire address advance
adverse angular airport alchemy almanac already amateur ambient amusing
anatomy ancient anguish antenna anxiety anybody anymore apparel applaud
approve archery archive arrange article artisan ascent assault assure
athlete attempt auction austere average awesome awkward baggage balance
balcony banking banner baptism bargain barrier battery bearing bedrock
beloved benefit service besiege betray between bicycle biology bizarre
blanket blossom boulder boundary bracket breadth brewery brigade brittle
broaden buffalo builder burgeon cabinet caldera caliber caution capable
capital caption captive capture caravan carrier cascade cassette catalog
caution ceiling century certain chamber channel chapter charity charter
chatter chemist chicken chimney chronic circuit citadel citizen clarify
clarity classic climate clothes cluster coastal collect college combine
comfort command comment company compare compass compile complex compose
concept concern concert conduct confirm conquer consent consist contact
contain content contest context control convert convince copious correct
cottage council counsel country courage crystal culture curious current
curtain custody customs cyclone decency declare decline default defence
deficit degrade delight deliver density deprive descent deserve despite
destiny develop devotion diagram dictate digital dignity diocese diploma
discard discuss disease dismiss display dispute distant distill disturb
diverse dividend dolphin drastic drought dwindle dynasty eastern ecology
economy edifice educate elastic elderly element elevate embargo embrace
eminent emotion emperor empower enclose endless endorse enforce engrave
enhance enlarge enquiry entitle envious epistle equator essence eternal
evening everyone evident exactly examine example excerpt exclaim exhibit
expanse expense explain explore express extract extreme faculty failure
fallacy farming fashion fatigue feather featured federal fertile festival
fiction fifteen finance finding fissure fitness flutter foliage footing
foreign forfeit formula fortune forward foundry fragile freedom freight
frontier further gallery garment general generic genuine gesture glacier
glimpse glitter grammar granite gravity grocery growing habitat halting
hanging harbour harvest headway hearing heavily heritage herself highway
himself history holiday horizon hospital hostile housing however hundred
hunting husband hygiene iceberg illness imagine immense imperial improve
impulse incense incline include indulge inertia inflict inherit initial
inquire insight inspire install instant instead intense interim intrigue
invader isolate janitor jealous journal journey justice justify keeping
keyhole kindred kingdom kitchen lantern largely lasting lattice laundry
lawsuit leather lecture legible leisure lettuce liberty library license
limited listener literal lodging logical lookout loyalty luggage machine
magenta magical magnify mankind mansion mariner maritime married martyr
massive mastery maximum meaning measure medical meeting mention message
midland migrate mileage million mineral minimum miracle mission mistake
mixture monarch monitor monster monthly morning mortgage motive mundane
musical mystery mystify narrate natural nearest neither nervous network
neutral nothing nowhere nurture oatmeal obscure observe obvious offense
officer omitted ongoing opening operate opinion opposite oracle orchard
organic outcome outlook outside overall oversee package painter palette
parking partial passage passion pasture patient pattern payment peasant
pendant pension percent perfect perform perhaps persist pertain phantom
physics pianist picture pilgrim pioneer plaster plateau platform pleasant
plumber politics portion possess postage posture poverty precise predict
premier premise prepare present preside pressure prevail prevent primary
privacy private problem proceed process proclaim produce product profile
program project promise promote protect protein protest provide provoke
prudent publish purpose pursuit pyramid quality quarrel quarter quietly
radiant railway rainbow rampart reactor reality receipt receive recital
recover recruit reflect refrain refresh regions regular related release
reliable relieve remains removal replace reptile request requires reserve
resolve respect respond restore retreat reunion revenue reverse revival
rivalry roughly routine runaway rupture sailing satisfy scatter scenery
scholar science scratch scruple seaside section segment seizure serious
service setting seventy several shallow shatter shelter sheriff shimmer
shortage shorter shoulder showcase shudder shuttle silence similar sincere
sixteen skillet slender society soldier someone songbird soprano sparkle
speaker special species specify specimen spectrum sponsor squadron stadium
stained stamina stapler startle station stature statute stellar sterile
stirrup storage strange stretch striker student subject subside suburb
succeed success suggest summary sunrise sunset support suppose supreme
surface surgeon surname surpass surplus survive suspect sustain swallow
sweater symptom teacher tedious telecom tempest tension terrace terrain
textile texture theater therapy thereby thermal thicket thought thunder
tonight torrent totally tourism tracing tractor traffic tragedy trailer
transit treason treasure trolley trouble trumpet tuition turbine typical
undergo uniform unknown unusual upgrade upright upstart usually utility
utmost vacancy vaguely variety vehicle velvet venture verdict version
veteran viaduct vicious victory village vintage violent virtual visible
visitor vitamin volcano voltage voyager waiting walkway warfare warrant
wayward weather welcome welfare western whereas whisper widower witness
wording worship wounded wrestle writing written
""".split()


def main() -> None:
    base = []
    for w in BASE_WORDS:
        if w.isascii() and w.isalpha():
            base.append(w)

    words: set[str] = set()
    for w in base:
        words.add(w)
        words.add(w.capitalize())

    sources = sorted(data.corpus_dir().glob("*.txt")) + [data.climbers_passage_path()]
    for f in sources:
        ws = strip_message(f.read_text(encoding="utf-8"))
        for w in ws.words:
            words.add(w)
            words.add(w.lower())
            words.add(w.lower().capitalize())

    out = data.wordlist_path()
    out.write_text("\n".join(sorted(words)) + "\n", encoding="utf-8")
    lengths = {}
    for w in words:
        lengths[len(w)] = lengths.get(len(w), 0) + 1
    print(f"wrote {len(words)} words to {out}")
    print("per-length counts:", dict(sorted(lengths.items())))


if __name__ == "__main__":
    main()
