// Copyright 2026 The SANS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Generated by scripts/gen_poseidon_params.py. Do not edit by hand;
// regenerate and diff instead. Values are canonical (non-Montgomery)
// little-endian u64 limbs of BN254 scalar-field elements.

#ifndef SANS_POSEIDON_CONSTANTS_HPP_
#define SANS_POSEIDON_CONSTANTS_HPP_

#include <cstdint>

namespace sans::poseidon_constants {

inline constexpr int kFullRounds = 8;
inline constexpr int kPartialRounds[4] = {56, 57, 56, 60};  // widths 2..5

// width 2: 128 round constants, 2x2 MDS
inline constexpr uint64_t kRoundConstants2[128][4] = {
    {0x6c7dc0dbd0abd7a7ULL, 0xa71aa177534cdd1bULL, 0xfe1faaba294cba38ULL, 0x09c46e9ec68e9bd4ULL},
    {0x3c1d83ffa604cb81ULL, 0xc5142b3ae405b834ULL, 0x2a97ed937f3135cfULL, 0x0c0356530896eec4ULL},
    {0x317ea977cc154a30ULL, 0xa00ea5aabd6268bdULL, 0x142e51182bb54cf4ULL, 0x1e28a1d935698ad1ULL},
    {0x4cf9e2b12b91251fULL, 0x0e5757c3e008db96ULL, 0x080965db30e298e4ULL, 0x27af2d831a9d2748ULL},
    {0x79aaf43545b74e03ULL, 0x41291462f214cd08ULL, 0x3a6a3cfe16ae175aULL, 0x1e6f11ce60fc8f51ULL},
    {0xf719206268d142d3ULL, 0x04462ed14c3613d8ULL, 0x8541819cb681f0beULL, 0x2a67384d3bbd5e43ULL},
    {0x36408f5d5c9f45d0ULL, 0xb985e381f0251889ULL, 0x1609f8e12fbfecf0ULL, 0x0b66fdf356093a61ULL},
    {0xdaa6852dbdb09e21ULL, 0x0b26c83cc5cebeedULL, 0x830c61093c2ade37ULL, 0x012ee3ec1e78d470ULL},
    {0x2d108e7b445bb1b9ULL, 0x6cd1c431b099b6bbULL, 0xfd88f67f8175e3fdULL, 0x0252ba5f6760bfbdULL},
    {0xef5aeaad7ca932f1ULL, 0x54391a8935ff71d6ULL, 0x6c6bec3cef542963ULL, 0x179474cceca5ff67ULL},
    {0x7e1a2589bbed2b91ULL, 0x9c1f974a264969b3ULL, 0x9228ff4a503fd4edULL, 0x2c24261379a51bfaULL},
    {0x53e66c0551801b05ULL, 0xc2f63f5001fc0fc5ULL, 0xac2f288bd0695b43ULL, 0x1cc1d7b62692e63eULL},
    {0x5d9eff5fd9c91b56ULL, 0x00784dbf17fbacd0ULL, 0xb2ed55f852979e96ULL, 0x255059301aada98bULL},
    {0xb11c29ce7e59efd9ULL, 0xaea24234970a8193ULL, 0x79e1f5c0eccd32b3ULL, 0x28437be3ac1cb2e4ULL},
    {0x338762c37f5f2043ULL, 0x18548da8fb4f78d4ULL, 0x1ca4fa6b53766eb1ULL, 0x28216a442f2e1f71ULL},
    {0x131f2377323482c9ULL, 0xeee1efce03094581ULL, 0x1f39f4e7056dd03fULL, 0x2c1f47cd17fa5adfULL},
    {0x646b8566a621afc9ULL, 0xd9dafca276638a63ULL, 0x8632bcc9356ceb7dULL, 0x07abad02b7a5ebc4ULL},
    {0x37da0c4d15f96c3cULL, 0x9429f90880a69cd1ULL, 0x275b33ffaab51dfeULL, 0x0230264601ffdf29ULL},
    {0x717e5d66899aa0a9ULL, 0xa864414557ee289eULL, 0xa0f168656497ca40ULL, 0x1bc973054e51d905ULL},
    {0x2a6b22288f0a67fcULL, 0xd249aff5c2d8421fULL, 0x206c3157e86341edULL, 0x2e1c22f964435008ULL},
    {0xa70452bc2bba86b8ULL, 0x9e8ea1598e46c9f7ULL, 0x121c1d5f461bbc50ULL, 0x1224f38df67c5378ULL},
    {0x69d2989186cde20eULL, 0xd7bfe8cd9dfeda19ULL, 0x9280b4bd9ed0068fULL, 0x02e4e69d8ba59e51ULL},
    {0x6d47e9735d98018eULL, 0x4f19ee364e653f07ULL, 0x7f5df81fc04ff3eeULL, 0x1f1eccc34aaba013ULL},
    {0xeacb8a4d4284f582ULL, 0x1424448032cd1819ULL, 0x74266c3039a9a731ULL, 0x1672ad3d709a3539ULL},
    {0x1d2ed602df8c8fc7ULL, 0xcda6961f284d2499ULL, 0x56f44af5192b4ae9ULL, 0x283e3fdc2c6e420cULL},
    {0x614fbd69ff394bccULL, 0x683751f8fdff59d6ULL, 0xd0db0957170fa013ULL, 0x1c2a3d120c550ecfULL},
    {0x96cb6b8177653fbdULL, 0x143a9a43773ea6f2ULL, 0xf7897a7323456efeULL, 0x216f84877aac6172ULL},
    {0x11a1f51552f94788ULL, 0xceaa47ea61ca59a4ULL, 0x64ba7e8e3e28d12bULL, 0x2c0d272becf2a757ULL},
    {0xcb4a6c3d89546f43ULL, 0x170a5480abe0508fULL, 0x484ee7a74c454e9fULL, 0x16e34299865c0e28ULL},
    {0x48cd939755488fc5ULL, 0x772047765802290fULL, 0x375a232a6fb9cc71ULL, 0x175ceba599e96f5bULL},
    {0xd8c5ffbb44a1ee32ULL, 0x6aa410bfbc354f54ULL, 0xfead9e1758b02806ULL, 0x0c7594440dc48c16ULL},
    {0x92479882d919fd8dULL, 0x760e20013ccf912cULL, 0xc466db7d7eb6fd8fULL, 0x1a3c29bc39f21bb5ULL},
    {0x95c8eeabcd22e68fULL, 0x0855d349074f5a66ULL, 0xc0986ea049b25340ULL, 0x0ccfdd906f3426e5ULL},
    {0xe0e699b67dd9e796ULL, 0x66a7a8a3fd065b3cULL, 0x2bdb475ce6c94118ULL, 0x14f6bc81d9f186f6ULL},
    {0x88edeb7386b97052ULL, 0xcc099810c9c495c8ULL, 0x9702ca70b2f6c5aaULL, 0x0962b82789fb3d12ULL},
    {0xafef0c8f6a31a86dULL, 0x13284ab01ef02575ULL, 0xbf20c79de25127bcULL, 0x1a880af7074d18b3ULL},
    {0x4c3012bb7ae9311bULL, 0x20af2924fc20ff3fULL, 0xcd5e77f0211c154bULL, 0x10cba18419a6a332ULL},
    {0x756a2849f302f10dULL, 0xfa27b7319cae3406ULL, 0xbdc76ba63a9eaca8ULL, 0x057e62a9a8f89b3eULL},
    {0xafa0413b44280ceeULL, 0xb961303bbf65cff5ULL, 0xd44adf5384b4988cULL, 0x287c971de91dc0abULL},
    {0x6f7f7960e306891dULL, 0x1e562bc46d4aba4eULL, 0xb3bca9da0cca908fULL, 0x21df3388af1687bbULL},
    {0x3eff8b560e1682b3ULL, 0x789df8f70b498fd8ULL, 0x3e25cc974d0934cdULL, 0x1be5c887d25bce70ULL},
    {0x48d59c2706a0d5c1ULL, 0xd2cb5d42fda5aceaULL, 0x68117175cea2cd0dULL, 0x268da36f76e568fbULL},
    {0xbd06460cc26a5ed6ULL, 0xc5d8bb74135ebd05ULL, 0xc609beaf5510ececULL, 0x0e17ab091f6eae50ULL},
    {0x040f5caa1f62af40ULL, 0x91ef62d8cf83d270ULL, 0x7aee535ab074a430ULL, 0x04d727e728ffa0a6ULL},
    {0x2b15417d7e39ca6eULL, 0x33702ac10f1bfd86ULL, 0x81b549762bc022edULL, 0x0ddbd7bf9c293415ULL},
    {0x8a29c49c8789654bULL, 0x34f5b0d1d3af9b58ULL, 0x768162e82989c6c2ULL, 0x2790eb3351621752ULL},
    {0x84b764206142f9e9ULL, 0x395f3d9ab8b2fd09ULL, 0x4471950193d8a570ULL, 0x1e457c601a63b73eULL},
    {0xc4c686fc46e091b0ULL, 0xfa90ecd0c43ff91fULL, 0x638d6ab2bbe7135fULL, 0x21ae64301dca9625ULL},
    {0x5858534eed8d350bULL, 0x854be9e3432e0955ULL, 0x4da293166f494928ULL, 0x0379f63c8ce3468dULL},
    {0x8c9f58a324c35049ULL, 0xca0e4921a46686acULL, 0x6a744a080809e054ULL, 0x002d56420359d026ULL},
    {0x0fc2c5af963515a6ULL, 0xda8d62459e21f409ULL, 0x1d68b3cd32e10bbeULL, 0x123158e5965b5d9bULL},
    {0x60c80eb49cad9ec1ULL, 0x0fbb2b6f52836d4eULL, 0x661d14bbf6cbe042ULL, 0x0be29fc40847a941ULL},
    {0x233802f24fdf4c1aULL, 0x36db9d859cad5f9aULL, 0x57716142015a453cULL, 0x1ac96991dec2bb05ULL},
    {0x51ca3355bcb0627eULL, 0x5e12c9fa97f18a92ULL, 0x5f4964fc61d23b3eULL, 0x1596443f763dbcc2ULL},
    {0xd6d049eae3ba3212ULL, 0xf1857d9f17e715aeULL, 0x6b2861d4ec3aeae0ULL, 0x12e0bcd3654bdfa7ULL},
    {0x04e6c76c7cf964baULL, 0xceabac7f37154b19ULL, 0x9ea73d4af9af2a50ULL, 0x0fc92b4f1bbea82bULL},
    {0x9c7e965233872762ULL, 0xb14f7c7722236f4fULL, 0xd6f2e592a8013f40ULL, 0x1f9c0b1610446442ULL},
    {0x8d159f643dbbf4d3ULL, 0x050d914da38b4c05ULL, 0xf8cde06157a782f4ULL, 0x0ebd74244ae72675ULL},
    {0x7a839839dccfc6d1ULL, 0x3b0671e97346ee39ULL, 0x69a9fafd4ab951c0ULL, 0x2cb7f0ed39e16e9fULL},
    {0x90c72bca7352d9bfULL, 0xce761d0514ce5266ULL, 0x5605443ee41bab20ULL, 0x1a9d6e2ecff022ccULL},
    {0x87da182d648ec72fULL, 0xd0c13326a9a7ba30ULL, 0x5ea83c3bc44a9331ULL, 0x2a115439607f335aULL},
    {0x9535c115c5a4c060ULL, 0xe738b56305cd44f2ULL, 0x15b8fa7aee3e3410ULL, 0x23f9b6529b5d040dULL},
    {0x260eb939f0e6e8a7ULL, 0xa3ce97c16d58b68bULL, 0x249ac6ba484bb9c3ULL, 0x05872c16db0f72a2ULL},
    {0x2b624a7cdeddf6a7ULL, 0x0219b6151d55b5c5ULL, 0xca20fb80118075f4ULL, 0x1300bdee08bb7824ULL},
    {0x072e4e7b7d52b376ULL, 0x8d7ad29916d98cb1ULL, 0xe63817863a8f6c28ULL, 0x19b9b63d2f108e17ULL},
    {0x24a20128481b4f7fULL, 0x13d1c88726b5ec42ULL, 0xb5bda237668522f6ULL, 0x015bee1357e3c015ULL},
    {0xea92c785b128ffd1ULL, 0xfe1e1ce4bab218cbULL, 0x1b9707a4f1615e4eULL, 0x2953736e94bb6b9fULL},
    {0x4ce7266ed6608dfcULL, 0x851b98d372b45f54ULL, 0x862f806180c0385fULL, 0x0b069353ba091618ULL},
    {0x4f588ac97d81f429ULL, 0x55aeb7eb9306b64eULL, 0x15e4e0bcfb93817eULL, 0x304f74d461ccc131ULL},
    {0xb8ee5415cde913fcULL, 0xaad2a164a4617a4cULL, 0xe8a33f5e77dfe4f5ULL, 0x15bbf146ce9bca09ULL},
    {0xa9ff23859572c8c6ULL, 0x9b8f4b850405c10cULL, 0x44901031487964edULL, 0x0ab4dfe0c2742cdeULL},
    {0x251de39f9639779aULL, 0xef5eedfea546dea9ULL, 0x97f45f7649a19675ULL, 0x0e32db320a044e31ULL},
    {0xa3078efa516da016ULL, 0x6797733a82774896ULL, 0xb27635a78b6888e6ULL, 0x0a1756aa1f378ca4ULL},
    {0x4254d6a2a25d93efULL, 0x95e61d328f85efa9ULL, 0x47fd17177f952ef8ULL, 0x044c4a33b10f6934ULL},
    {0xd37b07b5466c4b8bULL, 0xfe0879d79a496891ULL, 0xbe655b537f66f700ULL, 0x2ed3611b725b8a70ULL},
    {0xd8339ea7120858aaULL, 0xadfdeb9cfdd347b5ULL, 0xc8ecc3d722aa2e0eULL, 0x1f9ba4e8bab7ce42ULL},
    {0xb74056f865c5d3daULL, 0xa38e82ac4502066dULL, 0x8f7ee907a84e518aULL, 0x1b233043052e8c28ULL},
    {0xca2f97b020875954ULL, 0x902053bfc0f14db0ULL, 0x74031ab72bd55b4cULL, 0x2431e1cc164bb8d0ULL},
    {0xa791f273965801fdULL, 0xa13e322097583319ULL, 0x30cd6953a0a7db45ULL, 0x082f934c91f5aac3ULL},
    {0x9ad6bb930c48997cULL, 0xc77245e2ae7cbe99ULL, 0xa34be074315542a3ULL, 0x2b9a0a223e7538b0ULL},
    {0xb0b589cc70214e7dULL, 0x8164163e75a8a00eULL, 0xceb85483b887a9beULL, 0x0e1cd91edd2cfa2cULL},
    {0x88d324601cebe2f9ULL, 0x99774f19854d00f5ULL, 0xc951f61477e36989ULL, 0x2e1eac0f2bfdfd63ULL},
    {0x23d748115b500b83ULL, 0x7345784d8efdb33cULL, 0x0c76158e769d6d15ULL, 0x0cbfa95f37fb7406ULL},
    {0x980c232dfa4a4f84ULL, 0x76d991e3a77513d9ULL, 0xd65ad49d8a61e9a6ULL, 0x08f05b3be923ed44ULL},
    {0x25a2dd510c047ef6ULL, 0xe7284925dc0758a3ULL, 0x52bf8e21984d0443ULL, 0x22719e2a070bcd08ULL},
    {0xf41f62b2f26830c0ULL, 0x7bdbf036119982c0ULL, 0xc060f7fcc3a1ab4cULL, 0x041f596a9ee1cb2bULL},
    {0x19fcdd0986b10f89ULL, 0x021be1c2d0dc464aULL, 0x87628eb06f6b1d4cULL, 0x233fd35de1be520aULL},
    {0xefcb453c61c9c267ULL, 0xd31e078aa1b4707eULL, 0x4325e0a423ebc810ULL, 0x0524b46d1aa87a5eULL},
    {0xcc4486237c515211ULL, 0x4227bb954b0f3199ULL, 0xce47fcac894b8582ULL, 0x2c34f424c81e5716ULL},
    {0xf33010327de4915eULL, 0x2dd2025b5457cc97ULL, 0x207effc2b5541fb7ULL, 0x0b5f2a4b63387819ULL},
    {0xaefac41fe05c659fULL, 0xc17435d2f57af6ceULL, 0xc5b72fe439d2cfd6ULL, 0x22207856082ccc54ULL},
    {0x27854048ce2c8171ULL, 0xcdfb210194caf79fULL, 0x4e24159b7f8950b5ULL, 0x24d57a8bf5da63feULL},
    {0x73919bb23b79396eULL, 0x374ad7097bb01a85ULL, 0x3b371d75bd693f98ULL, 0x0afab181fdd5e058ULL},
    {0xf16290d62b1128eeULL, 0x76c0057194c16c0bULL, 0x998a52efac7cbd56ULL, 0x2dba9b108f208772ULL},
    {0x5aff13e6bce420b3ULL, 0xcbb83de0bd592b25ULL, 0x56f881c788f53f83ULL, 0x26349b66edb8b16fULL},
    {0x235288a3e6f137dbULL, 0xd81a56d28ecc193bULL, 0x685e95f92339753aULL, 0x25af7ce0e5e10357ULL},
    {0x1f7c0187fe35011fULL, 0x70eed7aae88b2bffULL, 0xc094d6a55edd68b9ULL, 0x25b4ce7bd2294390ULL},
    {0x8cb9d54c1e02b631ULL, 0xde9cef28ebdf30b1ULL, 0x387e53f1908a88e5ULL, 0x22c543f10f6c89ecULL},
    {0xdf668e74882f87a9ULL, 0x425e906a919d7a34ULL, 0x4fc7908a9f191e1eULL, 0x0236f93e7789c472ULL},
    {0x9cb497af980c4b52ULL, 0x652bdae114eb0165ULL, 0x0e7d27e37d05da99ULL, 0x29350b401166ca01ULL},
    {0xee1260916652363fULL, 0x65edb75d844ebb89ULL, 0x6bd31bbab547f75aULL, 0x0eed787d65820d3fULL},
    {0x1906f656f4de6fadULL, 0xfdcd0e99bd94297dULL, 0x036a753f520b3291ULL, 0x07cc1170f13b46f2ULL},
    {0x2059435689e8aceaULL, 0x908786d7f9f5d10cULL, 0xf49bcf613a3d30b1ULL, 0x22b939233b1d7205ULL},
    {0xadd650ace60ae5a6ULL, 0x740f083a5aa85438ULL, 0x8aad1dc8bc33e870ULL, 0x01451762a0aab81cULL},
    {0xe704fec0892fce89ULL, 0xe32eaa61dec7da57ULL, 0x61fabf1025d46d1fULL, 0x23506bb5d8727d44ULL},
    {0x7f8bd68907355522ULL, 0x2a3709531e1efea9ULL, 0xbac06ae3f71bdd09ULL, 0x2e484c44e838aea0ULL},
    {0x45418da26835b54cULL, 0xaf4a594545cedc25ULL, 0x379e78c50bd2e42bULL, 0x0f4bc7d07ebafd64ULL},
    {0xe620996d50d8e74eULL, 0x51582388725df460ULL, 0xfa76637862faaee8ULL, 0x1f4d3c8f6583e9e5ULL},
    {0x53eb9bcb48fe7389ULL, 0xfae02abc7b681d91ULL, 0x2660d07be0e4a988ULL, 0x093514e0c70711f8ULL},
    {0x4a58e0a347e153d8ULL, 0x43ee83ece47228f2ULL, 0x46699a2b5f3bc036ULL, 0x1adab0c8e2b3bad3ULL},
    {0x1a22dbef9e80dad2ULL, 0x378c1b94b8072bacULL, 0xd14709ebb474641aULL, 0x1672b1726057d99dULL},
    {0x30d47b239b479c14ULL, 0xc5d8e2fae0acc4eeULL, 0x8f44f53fdcab468cULL, 0x1dfd53d4576af2e3ULL},
    {0xbc7f207753205c60ULL, 0xe6d77d640f6fc3deULL, 0xa70a36263a37e17fULL, 0x0c6888a10b75b0f3ULL},
    {0x85091ecca9d1e508ULL, 0x611a61e00ee6848bULL, 0x92b34a7e77d12fe8ULL, 0x1addb933a65be770ULL},
    {0x7935628e299d1791ULL, 0xf638ff5425f0afffULL, 0x5c10ae18d1de933cULL, 0x00d7540dcd268a84ULL},
    {0xd316939d20b82c0eULL, 0x26fedde4acd99db1ULL, 0x01b2827a5664ca9cULL, 0x140c0e42687e9eadULL},
    {0xc091e2ae56565984ULL, 0xc20a0f9b24f8c5edULL, 0x91ba89b8d13d1806ULL, 0x2f0c3a115d4317d1ULL},
    {0xd8c538a1dc958c61ULL, 0x08a0cff670b22b82ULL, 0x3006ed220cf9c810ULL, 0x0c4ee778ff7c1455ULL},
    {0x27c3d7485de74c69ULL, 0x9424ed26c0acc662ULL, 0x3693f00440ccc360ULL, 0x1704f2766d46f82cULL},
    {0x39b66fe9009c3cfaULL, 0xf0769c9f8544e402ULL, 0xa7a02c1b51d244abULL, 0x2f2d19cc3ea5d78eULL},
    {0xd6c766a806fc6629ULL, 0xdd7ee6cb9cfed9c7ULL, 0x5053f112e2a8e8dcULL, 0x1ae03853b75fcabaULL},
    {0x4e41a86ddaf056d5ULL, 0x3556921b2d6f014eULL, 0x51d131d0fa61aa5fULL, 0x0971aabf795241dfULL},
    {0x5f5c29f7bfe2f646ULL, 0xda624f8380df1c87ULL, 0x91d4cf6b6e0de73eULL, 0x1408c316e6014e1aULL},
    {0x41691f39822ef5bdULL, 0x6c89f1f773ef2853ULL, 0x248abe42b543093bULL, 0x1667f3fe2edbe850ULL},
    {0x424c69576500fe37ULL, 0x5b81718409e5c133ULL, 0xa48b0a03557cdf91ULL, 0x13bf7c5d0d2c4376ULL},
    {0x19bc0ba743a62c2cULL, 0x024b95347856b797ULL, 0x3016adf3d3533c24ULL, 0x07620a6dfb0b6cecULL},
    {0x1675de3e1982b4d0ULL, 0x75d2959e2f322b73ULL, 0x36a8ca08bdbdd8b0ULL, 0x1574c7ef0c43545fULL},
    {0xc06e03a7ff8378f0ULL, 0x5bd4184571c254fdULL, 0xfd567970a717ceecULL, 0x269e4b5b7a2eb21aULL},
};
inline constexpr uint64_t kMds2[4][4] = {
    {0xbceca70bd2af7ad5ULL, 0xaf07f38af8c952a7ULL, 0xec10345351a23a3aULL, 0x066f6f85d6f68a85ULL},
    {0x05462b9f8125b1e8ULL, 0x20a7c02bbd8bea73ULL, 0x7782e1509b1d0fdbULL, 0x2b9d4b4110c9ae99ULL},
    {0xf573f431221f8ff9ULL, 0xb6c09d557013fff1ULL, 0x2bf67a4493cc262fULL, 0x0cc57cdbb08507d6ULL},
    {0x21bcd147943203c8ULL, 0xade857e86eb5c3a1ULL, 0xa31a6ed69724e1adULL, 0x1274e649a32ed355ULL},
};

// width 3: 195 round constants, 3x3 MDS
inline constexpr uint64_t kRoundConstants3[195][4] = {
    {0x8d21d47304cd8e6eULL, 0x14c4993c11bb2993ULL, 0xd05986d656f40c21ULL, 0x0ee9a592ba9a9518ULL},
    {0x5696fff40956e864ULL, 0x887b08d4d00868dfULL, 0x5986587169fc1bcdULL, 0x00f1445235f2148cULL},
    {0xe879f3890ecf73f5ULL, 0x30c728730b7ab36cULL, 0x1f29a058d0fa80b9ULL, 0x08dff3487e8ac99eULL},
    {0x20966310fadc01d0ULL, 0x56c35342c84bda6eULL, 0xc3ce28f7532b13c8ULL, 0x2f27be690fdaee46ULL},
    {0x8b8327bebca16cf2ULL, 0xb763fe04b8043ee4ULL, 0x2416bebf3d4f6234ULL, 0x2b2ae1acf68b7b8dULL},
    {0xe64b44c7dbf11cfaULL, 0x5952c175ab6b03eaULL, 0xcca5eac06f97d4d5ULL, 0x0319d062072bef7eULL},
    {0x8ef7b387bf28526dULL, 0xc8b7bf27ad49c629ULL, 0x8a376df87af4a63bULL, 0x28813dcaebaeaa82ULL},
    {0x150928adddf9cb78ULL, 0x2033865200c352bcULL, 0xf181bf38e1c1d40dULL, 0x2727673b2ccbc903ULL},
    {0xb8fb9e31e65cc632ULL, 0x6efbd43e340587d6ULL, 0xe74abd2b2a1494cdULL, 0x234ec45ca27727c2ULL},
    {0xcd99ff6e8797d428ULL, 0xab10a8150a337b1cULL, 0x7f862cb2cf7cf760ULL, 0x15b52534031ae18fULL},
    {0xd701d4eecf68d1f6ULL, 0x8e0e8a8d1b58b132ULL, 0x5ed9a3d186b79ce3ULL, 0x0dc8fad6d9e4b35fULL},
    {0x97805518a47e4d9cULL, 0xea4eb378f62e1fecULL, 0x600f705fad3fb567ULL, 0x1bcd95ffc211fbcaULL},
    {0x17cb978d069de559ULL, 0xc76da36c25789378ULL, 0xe9eff81b016fc34dULL, 0x10520b0ab721cadfULL},
    {0xe88a9eb81f5627f6ULL, 0x2932498075fed0acULL, 0x9b257d8ed5fbbaf4ULL, 0x1f6d48149b8e7f7dULL},
    {0xca34bdb5460c8705ULL, 0xfff8dc1c816f0dc9ULL, 0xd29e00ef35a2089bULL, 0x1d9655f652309014ULL},
    {0x8fe3d4185697cc7dULL, 0xa731ff67e4703205ULL, 0xb051f7b1cd43a99bULL, 0x04df5a56ff95bcafULL},
    {0xf6ec282b6e4be828ULL, 0x8690a10a8c8424a7ULL, 0x151b3d290cedaf14ULL, 0x0672d995f8fff640ULL},
    {0x9fc1d8209b5c75b9ULL, 0x0c9a9dcc06f2708eULL, 0xb21200d7ffafdd5fULL, 0x099952b414884454ULL},
    {0x83fd0e843a6b9fa6ULL, 0x48e43586a9b4cd91ULL, 0x7c483143ba8d4694ULL, 0x052cba2255dfd00cULL},
    {0x16077cb93c464ddcULL, 0x82de55707251ad77ULL, 0xb0bd74712b7999afULL, 0x0b8badee690adb8eULL},
    {0xb963d0a8e4b2bdd1ULL, 0x49c15d60683a8050ULL, 0x5a1ee651020c07c7ULL, 0x119b1590f13307afULL},
    {0xce15be0bfb4a8d09ULL, 0x2c4acfc884ef4ee5ULL, 0x2529d36be0f67b83ULL, 0x03150b7cd6d5d17bULL},
    {0xbe69cb317c9ea565ULL, 0x5374efb83d80898aULL, 0x3cf1951f17391235ULL, 0x2cc6182c5e14546eULL},
    {0x92d2cd73111bf0f9ULL, 0x4218cadedac14e2bULL, 0x50cfe129a404b376ULL, 0x005032551e6378c4ULL},
    {0x88f9da2cc28276b5ULL, 0x6469c399fcc069fbULL, 0xbb147e972ebcb951ULL, 0x233237e3289baa34ULL},
    {0xe80c2d4c24d60280ULL, 0x23037f21b34ae5a4ULL, 0xc980d31674bfbe63ULL, 0x05c8f4f4ebd4a6e3ULL},
    {0xee1f09b2590fc65bULL, 0x52bcf35ef3aeed91ULL, 0xba05d818a319f252ULL, 0x0a7b1db13042d396ULL},
    {0x5df542365a404ec0ULL, 0xf156e2b086ff47dcULL, 0xb14296572c9d32dbULL, 0x2a73b71f9b210cf5ULL},
    {0x76a760bb5c50c460ULL, 0xec18f2c4dbe7f229ULL, 0x935107e9ffc91dc3ULL, 0x1ac9b0417abcc9a1ULL},
    {0x9015ee046dc93fc0ULL, 0x269f3e4d6cb10434ULL, 0x3fabb076707ef479ULL, 0x12c0339ae0837482ULL},
    {0x8246682e56e9a28eULL, 0x52900aa3253baac6ULL, 0x7f5b18db4e1e704fULL, 0x0b7475b102a165adULL},
    {0x32ab3aa88d7f8448ULL, 0x7c843e379366f2eaULL, 0xdb1c5e49f6e8b891ULL, 0x037c2849e191ca3eULL},
    {0x45fdb176a716346fULL, 0xd5206c5c93a07dc1ULL, 0xe92674661e217e9bULL, 0x05a6811f8556f014ULL},
    {0x7b675ef5f38bd66eULL, 0x4076e87a7b2883b4ULL, 0x6e947b75d54e9f04ULL, 0x29a795e7d9802894ULL},
    {0x507be199981fd22fULL, 0x6e8c7382c8a1585cULL, 0x45a3857afc18f582ULL, 0x20439a0c84b322ebULL},
    {0x4a2a6f2a0982c887ULL, 0xbb50f27799a84b6dULL, 0x94ec2050c7371ff1ULL, 0x2e0ba8d94d9ecf4aULL},
    {0xe6d0ddcca17d71c8ULL, 0x17822cd2109048d2ULL, 0xca38eb7cce822b45ULL, 0x143fd115ce08fb27ULL},
    {0xc84323623be9caf1ULL, 0xf8611659323dbcbfULL, 0x57968dbbdcf813cdULL, 0x0c64cbecb1c734b8ULL},
    {0xf1426cef9403da53ULL, 0xe74f348d62c2b670ULL, 0x46fca925c163ff5aULL, 0x028a305847c683f6ULL},
    {0x24d6755b5db9e30cULL, 0x6a6bcb64d89427b8ULL, 0x5fa940ab4c4380f2ULL, 0x2e4ef510ff0b6fdaULL},
    {0xb96384f50579400eULL, 0x8925b4f6d033b078ULL, 0x63d79270c956ce3bULL, 0x0081c95bc43384e6ULL},
    {0xba8a9f4023a0bb38ULL, 0xe2491b349c039a0bULL, 0x187e2fade687e05eULL, 0x2ed5f0c91cbd9749ULL},
    {0x990f01f33a735206ULL, 0x3448a22c76234c8cULL, 0x4bbf374ed5aae2f0ULL, 0x30509991f88da350ULL},
    {0xa7529094424ec6adULL, 0xf0a1119fb2067b41ULL, 0x221b7c4d49a356b9ULL, 0x1c3f20fd55409a53ULL},
    {0x170887b47ddcb96cULL, 0xc46bb2213e8e131eULL, 0x049514459b6e18eeULL, 0x10b4e7f3ab5df003ULL},
    {0x039aa3502e43adefULL, 0xdd80f804c077d775ULL, 0x3ddd543d891c2abdULL, 0x2a1982979c3ff7f4ULL},
    {0x5cad0f1315bd5c91ULL, 0xba431ebc396c9af9ULL, 0xfeddbead56d6d55dULL, 0x1c74ee64f15e1db6ULL},
    {0x9c2fe45a0ae146a0ULL, 0x9e4f2e8b82708cfaULL, 0xeab9303cace01b4bULL, 0x07533ec850ba7f98ULL},
    {0x8a11abf3764c0750ULL, 0x285c68f42d42c180ULL, 0xa151e4eeaf17b154ULL, 0x21576b438e500449ULL},
    {0x743d6930836d4a9eULL, 0xbce8384c815f0906ULL, 0x08ad5ca193d62f10ULL, 0x2f17c0559b8fe796ULL},
    {0xe665b0b1b7e2730eULL, 0x9775a4201318474aULL, 0xa79e8aae946170bcULL, 0x2d477e3862d07708ULL},
    {0xd89be0f5b2747eabULL, 0xafba2266c38f5abcULL, 0x90e095577984f291ULL, 0x162f5243967064c3ULL},
    {0x7777a70092393311ULL, 0xd7a8596a87f29f8aULL, 0x264ecd2c8ae50d1aULL, 0x2b4cb233ede9ba48ULL},
    {0x4254e7c35e03b07aULL, 0x6db2eece6d85c4cfULL, 0x1dbaf8f462285477ULL, 0x2c8fbcb2dd8573dcULL},
    {0xe5e88db870949da9ULL, 0x9e1b61e9f601e9adULL, 0xf2ff453f0cd56b19ULL, 0x1d6f347725e4816aULL},
    {0x4cd49af5c4565529ULL, 0xf9e6ac02b68d3132ULL, 0xebc2d8b3df5b913dULL, 0x204b0c397f4ebe71ULL},
    {0x4ff8fb75bc79c502ULL, 0x9ecb827cd7dc2553ULL, 0x4f1149b3c63c3c2fULL, 0x0c4cb9dc3c4fd817ULL},
    {0x9a616ddc45bc7b54ULL, 0x1e5c49475279e063ULL, 0xa25416474f493030ULL, 0x174ad61a1448c899ULL},
    {0x3a9816d49a38d2efULL, 0xeaaa28c177cc0fa1ULL, 0xf759df4ec2f3cde2ULL, 0x1a96177bcf4d8d89ULL},
    {0x8242ace360b8a30aULL, 0x05202c126a233c1aULL, 0xd0ef8054bc60c4ffULL, 0x066d04b24331d71cULL},
    {0x27037a62aa1bd804ULL, 0x381cc65f72e02ad5ULL, 0x2195782871c6dd3bULL, 0x2a4c4fc6ec0b0cf5ULL},
    {0xe55afc01219fd649ULL, 0x5e727f8446f6d9d7ULL, 0x47e9f2e14a7cedc9ULL, 0x13ab2d136ccf37d4ULL},
    {0x4c2e3e869acc6a9aULL, 0xc1b04fcec26f5519ULL, 0x19d24d843dc82769ULL, 0x1121552fca260616ULL},
    {0x09a5546c7c97cff1ULL, 0xa6cd267d595c4a89ULL, 0x889bc81715c37d77ULL, 0x00ef653322b13d6cULL},
    {0x845aca35d8a397d3ULL, 0x400c776d652595d9ULL, 0x8b261d8ba74051e6ULL, 0x0e25483e45a66520ULL},
    {0x46448db979eeba89ULL, 0x395ac3d4dde92d8cULL, 0x245264659e15d88eULL, 0x29f536dcb9dd7682ULL},
    {0x0e456baace0fa5beULL, 0x5a124e2780bbea17ULL, 0xdfda33575dbdbd88ULL, 0x2a56ef9f2c53febaULL},
    {0xee416240a8cb9af1ULL, 0xf2ae2999a46762e8ULL, 0xecfb7a2d17b5c409ULL, 0x1c8361c78eb5cf5dULL},
    {0xd3d0ab4be74319c5ULL, 0x83e8e68a764507bfULL, 0xc0473089aaf0206bULL, 0x151aff5f38b20a0fULL},
    {0xe76e47615b51f100ULL, 0xa9f52fc8c8b6cdd1ULL, 0xc1b239c88f7f9d43ULL, 0x04c6187e41ed881dULL},
    {0x9e801b7ddc9c2967ULL, 0x4b81c61ed1577644ULL, 0x10d84331f6fb6d53ULL, 0x13b37bd80f4d27fbULL},
    {0x9321ceb1c4e8a8e4ULL, 0x2ce3664c2a52032cULL, 0xf578bfbd32c17b7aULL, 0x01a5c536273c2d9dULL},
    {0x832239065b7c3b02ULL, 0x4a9a2c666b9726daULL, 0x5ad05f5d7acb950bULL, 0x2ab3561834ca7383ULL},
    {0x9f7ed516a597b646ULL, 0xacaf6af4e95d3bf6ULL, 0x200fe6d686c0d613ULL, 0x1d4d8ec291e720dbULL},
    {0x1514c9c80b65af1dULL, 0xb925351240a04b71ULL, 0x8f5784fe7919fd2bULL, 0x041294d2cc484d22ULL},
    {0x042971dd90e81fc6ULL, 0x98f57939d126e392ULL, 0x1c4fa715991f0048ULL, 0x154ac98e01708c61ULL},
    {0x4524563bc6ea4da4ULL, 0x50b3684c88f8b0b0ULL, 0x3eedd84093aef510ULL, 0x0b339d8acca7d4f8ULL},
    {0x81ed95b50839c82eULL, 0x98f0e71eaff4a7ddULL, 0x54a4f84cfbab3445ULL, 0x0955e49e6610c942ULL},
    {0x3525401ea0654626ULL, 0xa9a6f41e6f535c6fULL, 0x26b9e22206f15abcULL, 0x06746a6156eba544ULL},
    {0xac917c7ff32077fbULL, 0x38e5790e2bd0a196ULL, 0x496f3820c549c278ULL, 0x0f18f5a0ecd1423cULL},
    {0x2a738223d6f76e13ULL, 0x4bb563583ede7bc9ULL, 0x8ac59eff5beb261eULL, 0x04f6eeca1751f730ULL},
    {0xc1768d26fc0b3758ULL, 0x8811eb116fb3e45bULL, 0xc1a3ec4da3cdce03ULL, 0x2b56973364c4c4f5ULL},
    {0x83feb65d437f29efULL, 0x8e1392b385716a5dULL, 0xdcd76b89804b1bcbULL, 0x123769dd49d5b054ULL},
    {0x94257b2fb01c63e9ULL, 0xa989f64464711509ULL, 0x88ee52b91169aaceULL, 0x2147b424fc48c80aULL},
    {0xea54ad897cebe54dULL, 0x647e6f34ad4243c2ULL, 0x1a6c5505ea332a29ULL, 0x0fdc1f58548b8570ULL},
    {0x944f685cc0a0b1f2ULL, 0xbceff28c5dbbe0c3ULL, 0xdf68abcf0f7786d4ULL, 0x12373a8251fea004ULL},
    {0xdd8a1f35c1a90035ULL, 0xa642756b6af44203ULL, 0xad7ea52ff742c9e8ULL, 0x21e4f4ea5f35f85bULL},
    {0x8a81934f1bc3b147ULL, 0xb57366492f45e90dULL, 0xdfb4722224d4c462ULL, 0x16243916d69d2ca3ULL},
    {0xa13a4159cac04ac2ULL, 0xabc21566e1a0453cULL, 0xf66f9adbc88b4378ULL, 0x1efbe46dd7a578b4ULL},
    {0x3b672cc96a88969aULL, 0xd468d5525be66f85ULL, 0x8886020e23a7f387ULL, 0x07ea5e8537cf5dd0ULL},
    {0xa9fe16c0b76c00bcULL, 0x650f19a75e7ce11cULL, 0xb7b478a30f9a5b63ULL, 0x05a8c4f9968b8aa3ULL},
    {0x2d9d57b72a32e83fULL, 0x3f7818c701b9c788ULL, 0xfbfe59bd345e8dacULL, 0x20f057712cc21654ULL},
    {0x9bd90b33eb33db69ULL, 0x6dcd8e88d01d4901ULL, 0x9672f8c67fee3163ULL, 0x04a12ededa9dfd68ULL},
    {0xe49ec9544ccd101aULL, 0xbd136ce5091a6767ULL, 0xe44f1e5425a51decULL, 0x27e88d8c15f37dceULL},
    {0x176c41ee433de4d1ULL, 0x6e096619a7703223ULL, 0xb8a5c8c5e95a41f6ULL, 0x2feed17b84285ed9ULL},
    {0x6972b8bd53aff2b8ULL, 0x94e5942911312a0dULL, 0x404241420f729cf3ULL, 0x1ed7cc76edf45c7cULL},
    {0xdf2874be45466b1aULL, 0xac6783476144cdcaULL, 0x157ff8c586f5660eULL, 0x15742e99b9bfa323ULL},
    {0x284f033f27d0c785ULL, 0x77107454c6ec0317ULL, 0xc895fc6887ddf405ULL, 0x1aac285387f65e82ULL},
    {0xec75a96554d67c77ULL, 0x832e2e7a49775f71ULL, 0xf9ddadbdb6057357ULL, 0x25851c3c845d4790ULL},
    {0x0ddccc3d9f146a67ULL, 0x53b7ebba2c552337ULL, 0xce78457db197edf3ULL, 0x15a5821565cc2ec2ULL},
    {0x2f15485f28c71727ULL, 0xdcf64f3604427750ULL, 0x0efa7e31a1db5966ULL, 0x2411d57a4813b998ULL},
    {0x58828b5ef6cb4c9bULL, 0x47e9a98e12f4cd25ULL, 0x13e335b8c0b6d2e6ULL, 0x002e6f8d6520cd47ULL},
    {0x398834609e0315d2ULL, 0xaf8f0e91e2fe1ed7ULL, 0x97da00b616b0fcd1ULL, 0x2ff7bc8f4380cde9ULL},
    {0xe93be4febb0d3cbeULL, 0x2e9521f6b7bb68f1ULL, 0x5ee02724471bcd18ULL, 0x00b9831b94852559ULL},
    {0x7d77adbf0c9c3512ULL, 0x1ca408648a4743a8ULL, 0x86913b0e57c04e01ULL, 0x0a2f53768b8ebf6aULL},
    {0x7f2a290305e1198dULL, 0x0f599ff7e94be69bULL, 0x3a479f91ff239e96ULL, 0x00248156142fd037ULL},
    {0x50eb512a2b2bcda9ULL, 0x397196aa6a542c23ULL, 0x28cf8c02ab3f0c9aULL, 0x171d5620b87bfb13ULL},
    {0x9d1045e4ec34a808ULL, 0x60c952172dd54dd9ULL, 0x70087c7c10d6fad7ULL, 0x170a4f55536f7dc9ULL},
    {0x482eca17e2dbfae1ULL, 0xcc37e38c1cd211baULL, 0x2ef3134aea04336eULL, 0x29aba33f799fe66cULL},
    {0xb5ba650369e64973ULL, 0xe70d114a03f6a0e8ULL, 0xfdd1bb1945088d47ULL, 0x1e9bc179a4fdd758ULL},
    {0x9c9e1c43bdaf8f09ULL, 0xfeaad869a9c4b44fULL, 0x58f7f4892dfb0b5aULL, 0x1dd269799b660fadULL},
    {0x5d1dd2cb0f24af38ULL, 0x7ccd426fe869c7c9ULL, 0x401181d02e15459eULL, 0x22cdbc8b70117ad1ULL},
    {0xd5ba93b9c7dacefdULL, 0xfd3150f52ed94a7cULL, 0x3a9f57a55c503fceULL, 0x0ef042e454771c53ULL},
    {0x3b304ffca62e8284ULL, 0x1318e8b08a0359a0ULL, 0xf287f3036037e885ULL, 0x11609e06ad6c8fe2ULL},
    {0x08b08f5b783aa9afULL, 0xfecd58c076dfe427ULL, 0x9e753eea427c17b7ULL, 0x1166d9e554616dbaULL},
    {0xf855a888357ee466ULL, 0x177fbf4cd2ac0b56ULL, 0x93413026354413dbULL, 0x2de52989431a8595ULL},
    {0x74bf01cf5f71e9adULL, 0xf51aee5b17b8e89dULL, 0x9a6da492f3a8ac1dULL, 0x3006eb4ffc7a8581ULL},
    {0x62344c8225145086ULL, 0x2993fe8f0a4639f9ULL, 0xfdcf6fff9e3f6f42ULL, 0x2af41fbb61ba8a80ULL},
    {0x81b214bace4827c3ULL, 0x8718ab27889e85e7ULL, 0xe5a6b41a8ebc85dbULL, 0x119e684de476155fULL},
    {0xcff784b97b3fd800ULL, 0xb51248c23828f047ULL, 0x188bea59ae363537ULL, 0x1835b786e2e8925eULL},
    {0x6c40e285ab32eeb6ULL, 0xd152bac2a7905c92ULL, 0x4d794996c6433a20ULL, 0x28201a34c594dfa3ULL},
    {0x4a761f88c22cc4e7ULL, 0x864c82eb57118772ULL, 0x94e80fefaf78b000ULL, 0x083efd7a27d17510ULL},
    {0x9e079564f61fd13bULL, 0x11c16df7774dd851ULL, 0x6158e61ceea27be8ULL, 0x0b6f88a357719952ULL},
    {0x14390e6ee4254f5bULL, 0x589511ca00d29e10ULL, 0x644f66e1d6471a94ULL, 0x0ec868e6d15e51d9ULL},
    {0x00d937ab84c98591ULL, 0xecd3e74b939cd40dULL, 0x1ac0c9b3ed2e1142ULL, 0x2af33e3f86677127ULL},
    {0x364ce5e47951f178ULL, 0x34568c547dd6858bULL, 0xd09b5d961c6ace77ULL, 0x0b520211f904b5e7ULL},
    {0xca228620188a1d40ULL, 0xa0c56ac4270e822cULL, 0xd8db58f10062a92eULL, 0x0b2d722d0919a1aaULL},
    {0xe0061d1ed6e562d4ULL, 0x57b54a9991ca38bbULL, 0xd980ceb37c2453e9ULL, 0x1f790d4d7f8cf094ULL},
    {0xda92ceb01e504233ULL, 0x0885c16235a2a6a8ULL, 0xaea97cd385f78015ULL, 0x0171eb95dfbf7d1eULL},
    {0x762305381b168873ULL, 0x790b40defd2c8650ULL, 0x329bf6885da66b9bULL, 0x0c2d0e3b5fd57549ULL},
    {0x5d3803054407a18dULL, 0x7cbcafa589e283c3ULL, 0x4e5a8228b4e72b37ULL, 0x1162fb28689c2715ULL},
    {0x1623ef8249711bc0ULL, 0x282c5a92a89e1992ULL, 0x64ad386a91e8310fULL, 0x2f1459b65dee441bULL},
    {0xc243f70d1b53cfbbULL, 0xbc489d46754eb712ULL, 0x996d74367d5cd4c1ULL, 0x1e6ff3216b688c3dULL},
    {0x76881f9326478875ULL, 0xd741a6f36cdc2a05ULL, 0x681487d27d157802ULL, 0x01ca8be73832b8d0ULL},
    {0x0b9b5de315f9650eULL, 0x680286080b10cea0ULL, 0x86f976d5bdf223dcULL, 0x1f7735706ffe9fc5ULL},
    {0x4745ca838285f019ULL, 0x21ac10a3d5f096efULL, 0x40a0c2dce041fba9ULL, 0x2522b60f4ea33076ULL},
    {0x8ce16c235572575bULL, 0x3418cad4f52b6c3fULL, 0x5255075ddc957f83ULL, 0x23f0bee001b1029dULL},
    {0x66d9401093082d59ULL, 0x5d142633e9df905fULL, 0xcaac2d44555ed568ULL, 0x2bc1ae8b8ddbb81fULL},
    {0x8011fcd6ad72205fULL, 0x62371273a07b1fc9ULL, 0x7304507b8dba3ed1ULL, 0x0f9406b8296564a3ULL},
    {0xcb126c8cd995f0a8ULL, 0x17e75b174a52ee4aULL, 0x67b72998de90714eULL, 0x2360a8eb0cc7defaULL},
    {0x6dcbbc2767f88948ULL, 0xb4815a5e96df8b00ULL, 0x804c803cbaef255eULL, 0x15871a5cddead976ULL},
    {0x4f957ccdeefb420fULL, 0x362f4f54f7237954ULL, 0x0a8652dd2f3b1da0ULL, 0x193a56766998ee9eULL},
    {0xe4309805e777ae0fULL, 0x3b2e63c8ad334834ULL, 0x2f9be56ff4fab170ULL, 0x2a394a43934f8698ULL},
    {0xb4166e8876c0d142ULL, 0x892cd11223443ba7ULL, 0x3e8b635dcb345192ULL, 0x1859954cfeb8695fULL},
    {0x408d3819f4fed32bULL, 0x2b11bc25d90bbdcaULL, 0x013444dbcb99f190ULL, 0x04e1181763050e58ULL},
    {0x1f5e5552bfd05f23ULL, 0xb10eb82db08b5e8bULL, 0x40c335ea64de8c5bULL, 0x0fdb253dee83869dULL},
    {0xa9d7c5bae9b4f1c0ULL, 0x75f08686f1c08984ULL, 0xaa4efb623adead62ULL, 0x058cbe8a9a5027bdULL},
    {0xd15228b4cceca59aULL, 0x23b4b83bef023ab0ULL, 0x497eadb1aeb1f52bULL, 0x1382edce9971e186ULL},
    {0xe1e6634601d9e8b5ULL, 0x7f61b8eb99f14b77ULL, 0x0819ca51fd11b0beULL, 0x03464990f045c6eeULL},
    {0xaa5bc137aeb70a58ULL, 0x6fcab4605db2eb5aULL, 0xfff33b41f98ff83cULL, 0x23f7bfc8720dc296ULL},
    {0x19636158bbaf62f2ULL, 0x18c3ffd5e1531a92ULL, 0x7e6e94e7f0e9decfULL, 0x0a59a158e3eec211ULL},
    {0xf4c23ed0075fd07bULL, 0xe2c4eba065420af8ULL, 0xb58bf23b312ffd3cULL, 0x06ec54c80381c052ULL},
    {0x962f0ff9ed1f9d01ULL, 0xb09340f7a7bcb1b4ULL, 0x476b56648e867ec8ULL, 0x118872dc832e0eb5ULL},
    {0x95e1906b520921b1ULL, 0x52e0b0f0e42d7feaULL, 0x5ad5c7cba7ad59edULL, 0x13d69fa127d83416ULL},
    {0xfd8a49f19f10c77bULL, 0xde143942fb71dc55ULL, 0x70b1c6877a73d21bULL, 0x169a177f63ea6812ULL},
    {0xfb7e9a5a7450544dULL, 0x3abeb032b922f66fULL, 0xef42f287adce40d9ULL, 0x04ef51591c6ead97ULL},
    {0xd5f45ee6dd0f69ecULL, 0x19ec61805d4f03ceULL, 0x0ecd7ca703fb2e3bULL, 0x256e175a1dc07939ULL},
    {0xa002813d3e2ceeb2ULL, 0x75cc360d3205dd2dULL, 0xe5f2af412ff6004fULL, 0x30102d28636abd5fULL},
    {0x1fd31be182fcc792ULL, 0x0443a3fa99bef4a3ULL, 0x1c0714bc73eb1bf4ULL, 0x10998e42dfcd3bbfULL},
    {0xecad76f879e36860ULL, 0x9f3362eaf4d582efULL, 0x25fa7d24b598a1d8ULL, 0x193edd8e9fcf3d76ULL},
    {0xf2664d7aa51f0b5dULL, 0xd1c7a561ce611425ULL, 0xd0368ce80b7b3347ULL, 0x18168afd34f2d915ULL},
    {0x29e2e95b33ea6111ULL, 0xa328ec77bc33626eULL, 0x0c017656ebe658b6ULL, 0x29383c01ebd3b6abULL},
    {0x00bf573f9010c711ULL, 0x702db6e86fb76ab6ULL, 0xa1f4ae5e7771a64aULL, 0x10646d2f2603de39ULL},
    {0x64d0242dcb1117fbULL, 0x2f90c25b40da7b38ULL, 0xf575f1395a55bf13ULL, 0x0beb5e07d1b27145ULL},
    {0xdffbf018d96fa336ULL, 0x30f95bb2e54b59abULL, 0xdc0d3ecad62b5c88ULL, 0x16d685252078c133ULL},
    {0xfd672dd62047f01aULL, 0x0a555bbbec21ddfaULL, 0x3c74154e0404b4b4ULL, 0x0a6abd1d833938f3ULL},
    {0x70a6f19b34cf1860ULL, 0xb12dffeec4503172ULL, 0x8ea12a4c2dedc8feULL, 0x1a679f5d36eb7b5cULL},
    {0xfbc7592e3f1b93d6ULL, 0x26a423eada4e8f6fULL, 0x3974d50e0ebfde47ULL, 0x0980fb233bd456c2ULL},
    {0x03ebacb5c312c72bULL, 0xcece3d5628c92820ULL, 0xbf1810af93a38fc0ULL, 0x161b42232e61b84cULL},
    {0xd09203db47de1a0bULL, 0x493f09787f1564e5ULL, 0x950f7d47a60d5e6aULL, 0x0ada10a90c7f0520ULL},
    {0xb50ddb9af407f451ULL, 0xd3f07a8a2b4e121bULL, 0x320345a29ac4238eULL, 0x1a730d372310ba82ULL},
    {0xfbda10ef58e8c556ULL, 0x908377feaba5c4dfULL, 0x817064c369dda7eaULL, 0x2c8120f268ef054fULL},
    {0x6e7b8649a4968f70ULL, 0xb930e95313bcb73eULL, 0xa57c00789c684217ULL, 0x1c7c8824f758753fULL},
    {0xb47b27fa3fd1cf77ULL, 0xf400ad8b491eb3f7ULL, 0x8e39e4077a74faa0ULL, 0x2cd9ed31f5f8691cULL},
    {0x854ae23918a22eeaULL, 0xa5e022ac321ca550ULL, 0xcf60d92f57618399ULL, 0x23ff4f9d46813457ULL},
    {0xdff1ea58f180426dULL, 0xaf5a2c5103529407ULL, 0xceece6405dddd9d0ULL, 0x09945a5d147a4f66ULL},
    {0x8a6dd223ec6fc630ULL, 0x7c7da6eaa29d3f26ULL, 0xb67660c6b771b90fULL, 0x188d9c528025d4c2ULL},
    {0xe0c0d8ddf4f0f47fULL, 0xdba7d926d3633595ULL, 0x81f68311431d8734ULL, 0x3050e37996596b7fULL},
    {0x9d829518d30afd78ULL, 0x6ceae5461e3f95d8ULL, 0x1600ca8102c35c42ULL, 0x15af1169396830a9ULL},
    {0x04284da3320d8accULL, 0xdae933e351466b29ULL, 0xa06d9f37f873d985ULL, 0x1da6d09885432ea9ULL},
    {0xe546ee411ddaa9cbULL, 0x4e4fad3dbe658945ULL, 0xf5f8acf33921124eULL, 0x2796ea90d269af29ULL},
    {0x7cb0319e01d32d60ULL, 0x1e15612ec8e9304aULL, 0x0325c8b3307742f0ULL, 0x202d7dd1da0f6b4bULL},
    {0xa29dace4c0f8be5fULL, 0xa2d7f9c788f4c831ULL, 0x156a952ba263d672ULL, 0x096d6790d05bb759ULL},
    {0x63798cb1447d25a4ULL, 0x438da23ce5b13e19ULL, 0x83808965275d877bULL, 0x054efa1f65b0fce2ULL},
    {0x64ccf6e18e4165f1ULL, 0xd8aa690113b2e148ULL, 0xdb3308c29802deb9ULL, 0x1b162f83d917e93eULL},
    {0xc5ceb745a0506edcULL, 0xedfefc1466cc568eULL, 0xfd9f1cdd2a0de39eULL, 0x21e5241e12564dd6ULL},
    {0x7b4349e10e4bdf08ULL, 0xcb73ab5f87e16192ULL, 0x226a80ee17b36abeULL, 0x1cfb5662e8cf5ac9ULL},
    {0x29c53f666eb24100ULL, 0x2c99af346220ac01ULL, 0xbae6d8d1ecb373b6ULL, 0x0f21177e302a771bULL},
    {0xbcef7e1f515c2320ULL, 0xc4236aede6290546ULL, 0xaffb0dd7f71b12beULL, 0x1671522374606992ULL},
    {0xd419d2a692cad870ULL, 0xbe2ec9e42c5cc8ccULL, 0x2eb4cf24501bfad9ULL, 0x0fa3ec5b9488259cULL},
    {0x85e8c57b1ab54bbaULL, 0xd36edce85c648cc0ULL, 0x57cb266c1506080eULL, 0x193c0e04e0bd2983ULL},
    {0xce14ea2adaba68f8ULL, 0x9f6f7291cd406578ULL, 0x7e9128306dcbc3c9ULL, 0x102adf8ef74735a2ULL},
    {0x40a6d0cb70c3eab1ULL, 0x316aa24bfbdd23aeULL, 0xe2a54d6f1ad945b1ULL, 0x0fe0af7858e49859ULL},
    {0xe8a5ea7344798d22ULL, 0x2da5f1daa9ebdefdULL, 0x08536a2220843f4eULL, 0x216f6717bbc7dedbULL},
    {0xf88e2e4228325161ULL, 0x3c23b2ac773c6b3eULL, 0x4a3e694391918a1bULL, 0x1da55cc900f0d21fULL},
};
inline constexpr uint64_t kMds3[9][4] = {
    {0xfedb68592ba8118bULL, 0x94be7c11ad24378bULL, 0xb2b70caf5c36a7b1ULL, 0x109b7f411ba0e4c9ULL},
    {0xd6c64543dc4903e0ULL, 0x9314dc9fdbdeea55ULL, 0x6ae119424fddbcbcULL, 0x16ed41e13bb9c0c6ULL},
    {0x791a93b74e36736dULL, 0xf706ab640ceb247bULL, 0xf617e7dcbfe82e0dULL, 0x2b90bba00fca0589ULL},
    {0xd62940bcde0bd771ULL, 0x2cc8fdd1415c3ddeULL, 0xb9c36c764379dbcaULL, 0x2969f27eed31a480ULL},
    {0x29b2311687b1fe23ULL, 0xb89d743c8c7b9640ULL, 0x4c9871c832963dc1ULL, 0x2e2419f9ec02ec39ULL},
    {0xc8aacc55a0f89bfaULL, 0x148d4e109f5fb065ULL, 0x97315876690f053dULL, 0x101071f0032379b6ULL},
    {0x326244ee65a1b1a7ULL, 0xe6cd79e28c5b3753ULL, 0x0d5f9e654638065cULL, 0x143021ec686a3f33ULL},
    {0xb16cdfabc8ee2911ULL, 0xd057e12e58e7d7b6ULL, 0x82a70eff08a6fd99ULL, 0x176cc029695ad025ULL},
    {0x73279cd71d25d5e0ULL, 0xa644470307043f77ULL, 0x17ba7fee3802593fULL, 0x19a3fc0a56702bf4ULL},
};

// width 4: 256 round constants, 4x4 MDS
inline constexpr uint64_t kRoundConstants4[256][4] = {
    {0x8b0878e269ed23e5ULL, 0x02bb86744edc2623ULL, 0x48da1d39bd5e4a43ULL, 0x19b849f69450b068ULL},
    {0xad47f80c8dcf34d6ULL, 0x20eb2cc7450acc1dULL, 0x7239347b758f0a13ULL, 0x265ddfe127dd51bdULL},
    {0x3dfc36bab497d8aaULL, 0x4108ac845015c2aaULL, 0xe0f66a545e1e5162ULL, 0x199750ec472f1809ULL},
    {0xd032f787c7f1cdf8ULL, 0x4d743ea25067f0ffULL, 0x110f06a5f74302b1ULL, 0x157ff3fe65ac7208ULL},
    {0xfe18f4896ac94902ULL, 0x0b15c590692f8beeULL, 0x5fd35ac45fca33f1ULL, 0x2e49c43c4569dd9cULL},
    {0x2731345ffa2d1f1eULL, 0xcb2f0b6973c24fa8ULL, 0x0d4aef2b6d6506c3ULL, 0x0e35fb8998189052ULL},
    {0xc6fe723002e0b996ULL, 0xa9d9e7806d667ffeULL, 0x05f109ae5e944f1bULL, 0x251ad47cb15c4f11ULL},
    {0x563fa39d9c22df4eULL, 0xf8beb56fdd05e5f3ULL, 0x9873e97160234641ULL, 0x13da07dc64d42836ULL},
    {0x46e7b89055fd4738ULL, 0xa553939689d350cdULL, 0x3dc00c7dccef7483ULL, 0x0c009b84e650e6d2ULL},
    {0x203dec74befdca06ULL, 0x04eb650c6d535eb0ULL, 0x01992e3956f42d8bULL, 0x011f16b1c63a854fULL},
    {0x85df07093f367549ULL, 0x2f3f78d0467ad454ULL, 0x209d9a561daa7961ULL, 0x0ed69e5e383a688fULL},
    {0x463672264c9f789bULL, 0x3aec507f5eb3d33fULL, 0x21acad41472b6bbeULL, 0x04dba94a7b0ce9e2ULL},
    {0xce732ff1d4fa28e8ULL, 0x6036757d4bb50bf7ULL, 0x6eb094271c9d237bULL, 0x0a3f2637d840f3a1ULL},
    {0xe54a485d1182323fULL, 0x39b1f075569564b6ULL, 0x8f8a1c502fdb38faULL, 0x259a666f129eea19ULL},
    {0x7a32fdf7ede0d6a1ULL, 0x7745d4271038e515ULL, 0xd8e7d06a4ee3a47fULL, 0x28bf7459c9b2f4c6ULL},
    {0xec91bd6941432447ULL, 0xc37c85bbcce6a2aeULL, 0x26ea200f489be8d4ULL, 0x0a1ca941f0570375ULL},
    {0xb43a26fd926361cfULL, 0x5535ed1539f051dcULL, 0x53d7fd4fc5451285ULL, 0x0c6f8f958be0e930ULL},
    {0x84dd57e69caaf811ULL, 0xa9e8a00708e296e0ULL, 0xd426e8128ac9d90aULL, 0x123106a93cd17578ULL},
    {0x7b074867cd2dee75ULL, 0x5e8fa83ff1e8f187ULL, 0x7dd3ab52f8e84008ULL, 0x26e1ba52ad9285d9ULL},
    {0x4471537e6a4ae2c5ULL, 0xbe4d8b7bf9e09586ULL, 0x18a64c5c47b9c97cULL, 0x1cb55cad7bd133deULL},
    {0x7143f08e6e9055d0ULL, 0x2a53043d5060a41cULL, 0x0e2c7ce04bde7f6dULL, 0x1dcd73e46acd8f8eULL},
    {0xb12b9bb4512e5574ULL, 0x0cda294a0eb4e9b9ULL, 0xf5852f05474a4defULL, 0x011003e32f6d9c66ULL},
    {0xd7c508dd2287ae8cULL, 0xbadfe5903f58bafeULL, 0x9ad5f20d03a57dfeULL, 0x2b1e809ac1d10ab2ULL},
    {0xeaa69ae87bcec0a5ULL, 0xef995d05ab2fc5faULL, 0x9fb4dac35ee17ed0ULL, 0x2539de1785b73599ULL},
    {0x43982cb11d77951dULL, 0xf4e1c3d41c86d46eULL, 0x26497f222b3e0a0eULL, 0x0c246c5a2ef8ee01ULL},
    {0x3f0305f5d03b527bULL, 0xbb09e6a6ad1a1c2fULL, 0x5408148f7c0632edULL, 0x192089c4974f68e9ULL},
    {0x6d8fdc2fb5a60d85ULL, 0x8529097d91096b75ULL, 0x6a0ee36eeb0d0c05ULL, 0x1eae0ad8ab68b2f0ULL},
    {0x9768bd98c5d06bfbULL, 0xdb6e2fdc0dee99e6ULL, 0xe46f8282872abc88ULL, 0x179190e5d0e22179ULL},
    {0x6cafe794a9b3cd1cULL, 0x14528f7db00f31bfULL, 0x76e9a81c7ac4b832ULL, 0x29bb9e2c90767325ULL},
    {0xb10e590e6e691e08ULL, 0x52652645882aac35ULL, 0x403efd0c2464a90dULL, 0x225d394e42207599ULL},
    {0xe09efd454b23fd59ULL, 0x2be13557451c087dULL, 0x753d238055b44453ULL, 0x064760623c25c8cfULL},
    {0x922910a78f6b5b87ULL, 0x4d67f4bf42a75c10ULL, 0x7f301c4b716d8a39ULL, 0x10ba3a0e01df92e8ULL},
    {0x361b77693f21471cULL, 0xcb511bc0c242eb9dULL, 0x4f9c6e96b0c2a801ULL, 0x0e070bf53f8451b2ULL},
    {0xa7f921014de252fbULL, 0xccd6cb11d2491d8aULL, 0xd39755ff93821a73ULL, 0x1b94cd61b051b04dULL},
    {0x0487b5aa7d74070bULL, 0x9d4e917d5713bb05ULL, 0xe148787a2e70230fULL, 0x1d7cb39bafb8c744ULL},
    {0xbb74ac1f303b17dbULL, 0x8785c2961829f701ULL, 0x9117d0fe980c80ffULL, 0x2ec93189bd1ab4f6ULL},
    {0x82ea46bd83517926ULL, 0xeac404a19ae07a90ULL, 0xa692bb825b86275bULL, 0x2db366bfdd36d277ULL},
    {0xdc99cec6960711b8ULL, 0x985275428450359aULL, 0x69655cf186a68532ULL, 0x062100eb485db062ULL},
    {0x00c567bf41f5a59bULL, 0x20243f92fa59e4f9ULL, 0x570e7f1e8244ca11ULL, 0x0761d33c66614aaaULL},
    {0xf7a72e494855ad0dULL, 0x5d78608a0f7de4ccULL, 0x2c2705aa034e3f31ULL, 0x20fc411a114d1399ULL},
    {0xc3a30f317250bc5aULL, 0x102c67e8b3effb5fULL, 0xadd9ec4e9ab219baULL, 0x25b5c004a4bdfcb5ULL},
    {0xd87e7dff62b37f4bULL, 0x038b186d8474155aULL, 0xa494e58f6df6f5edULL, 0x23b1822d278ed632ULL},
    {0x16102a29cc2f69e0ULL, 0x0f14d13bfcfcccaaULL, 0x606c4ba9012499bfULL, 0x22734b4c5c3f9493ULL},
    {0x54413d3fad795ce5ULL, 0xe5bdff409aa36102ULL, 0xe27a74dc33492347ULL, 0x26c0c8fe09eb30b7ULL},
    {0xbbd626df348ccad9ULL, 0x196be3083a809829ULL, 0xe88eac03fa1fbb26ULL, 0x070dd0ccb6bd7bbaULL},
    {0x6067c4ebfd4250daULL, 0xc2c0a6de46d8c5adULL, 0xb043ba78bb28c3beULL, 0x12b6595bdb329b6fULL},
    {0x5e33d95bb7e8d729ULL, 0xc06fca9b275c671cULL, 0x3bec30e7a5876c11ULL, 0x248d97d7f76283d6ULL},
    {0x106d15d9bd9baaaaULL, 0x8b45eb759ddde4aaULL, 0x16fc6fd64cc93931ULL, 0x1a306d439d463b08ULL},
    {0x0d62d3d6ec7c56cfULL, 0xf4f1b54ddc27821bULL, 0xced7c00421cb4621ULL, 0x28a8f8372e3c38daULL},
    {0xbc852183e1e2ce7eULL, 0x071ce320c829f388ULL, 0xbb35152f24d43294ULL, 0x0094975717f9a8a8ULL},
    {0xf4103246db2e8d65ULL, 0x593f74d4f653ae83ULL, 0x80fde60d716480d3ULL, 0x04d5ee4c3aa78f7dULL},
    {0xd08495c12efde187ULL, 0xc7bef54b8822cc76ULL, 0x6349ad6fb8ed2269ULL, 0x2a6cf5e9aa03d433ULL},
    {0xbaae48d7efcba3f3ULL, 0xf792180808fd6e43ULL, 0x9274da43e19ddeb7ULL, 0x2304d31eaab960baULL},
    {0xe1c11d39d199f0b0ULL, 0xbff08a7e0726fcb4ULL, 0xd5e7009785817249ULL, 0x03fd9ac865a4b2a6ULL},
    {0x3f7954d4d63b0b64ULL, 0x798afc3a20919307ULL, 0x2248404d55ee5044ULL, 0x00b7258ded52bbdaULL},
    {0x6272c5ca65e92d9aULL, 0xb13d3a74f3298db3ULL, 0xec38fca2d4bf65ebULL, 0x159f81ada0771799ULL},
    {0x71e144cf4264431fULL, 0x9000130ea25f0c54ULL, 0x50237a75bc28e3bbULL, 0x1ef90e67437fbc85ULL},
    {0x95a79ed82932e30dULL, 0x8df739bc176b08ecULL, 0x196b49aa41a2d256ULL, 0x1e65f838515e5ff0ULL},
    {0x6575c1068c94c33fULL, 0xb18c844e570e1f82ULL, 0xec6ce768d079ba74ULL, 0x2b1b045def3a166cULL},
    {0xf1c6e07c168bb173ULL, 0x65dc2d73bef715e3ULL, 0x402543b1109229c1ULL, 0x0832e5753ceb0ff6ULL},
    {0xc5a8e3c390b6ad16ULL, 0xb1b841c2e8b6451bULL, 0x6b762ae0a37d41baULL, 0x02f614e9cedfb3dcULL},
    {0x0f6a0be27e7ed705ULL, 0x7370ebb777bedff4ULL, 0xdd640b8e362cad96ULL, 0x0e2427d38bd46a60ULL},
    {0x0768bbe29214a53aULL, 0x049f0ec098c3c7c5ULL, 0xeb7c84d414e7ce79ULL, 0x0493630b7c670b6dULL},
    {0x3dc06cc85327cea9ULL, 0x6bb1515355d5461aULL, 0x4decdab17066c5a2ULL, 0x22ead100e8e48267ULL},
    {0xe5084e0b6d2a6f16ULL, 0x583f1ae35626d04dULL, 0xaae2626ed2554d48ULL, 0x25b3e56e655b42cdULL},
    {0x4b4fdc0a0cf6f9d0ULL, 0xb599c336349e4c58ULL, 0x5837a6cde8ff13dbULL, 0x1e32752ada8836efULL},
    {0x72a9864074d412e5ULL, 0x23c00995f05078f6ULL, 0xc50f68f6f3c3455bULL, 0x2fa2a871c15a387cULL},
    {0xcd18e7c7a7d83505ULL, 0x54ccbf10661bab7fULL, 0x278e1db7311e889fULL, 0x2f569b8a9a4424c9ULL},
    {0x44165374b246b43dULL, 0xa7df93f7332ffd21ULL, 0x531ade530234c518ULL, 0x044cb455110a8fddULL},
    {0x78ddc723a5319025ULL, 0x91fe8c90adfe1181ULL, 0x420246157f2e42b1ULL, 0x227808de93906d5dULL},
    {0x8579d2e7a6800355ULL, 0x5d03781ae090ad4aULL, 0x623adead87357986ULL, 0x02fcca2934e046bcULL},
    {0xcbec2e060d8befacULL, 0xbad3f3c5ab91a8ddULL, 0x6abccceb344a1d36ULL, 0x0ef915f0ac120b87ULL},
    {0xf3b16ef2b1405d38ULL, 0xab0fb85f6be63b09ULL, 0x77eb757bc6f287f6ULL, 0x1797130f4b7a3e17ULL},
    {0x36c668555decc6e5ULL, 0x8c7f497c20156d4dULL, 0x3306c85abab59e60ULL, 0x0a76225dc04170aeULL},
    {0x96174b5326a31a5cULL, 0xf8fa76d48acb6647ULL, 0xa1e77a7b93209af6ULL, 0x1fffb9ec1992d66bULL},
    {0x0611889b797b9c5fULL, 0x5f8fbba6c6b9c609ULL, 0x53b57c338fa538d8ULL, 0x25721c4fc15a3f28ULL},
    {0xeb63b982bfcaf75aULL, 0xadb4c3790705da95ULL, 0x215e3d07ba197216ULL, 0x0c817fd42d5f7a41ULL},
    {0x2bc15866e52b5a96ULL, 0xdf8cf86ce00a2200ULL, 0x9f7e13c2c24970b6ULL, 0x13abe3f5239915d3ULL},
    {0x92cd60acb4d391ceULL, 0x5c1bc3dc29bdbd7aULL, 0x12ef7f39987a46c8ULL, 0x2106feea546224eaULL},
    {0x57e1b3345bb0f959ULL, 0xf1ca5a28c748bc71ULL, 0xaaa79474a37dab49ULL, 0x21ca859468a746b6ULL},
    {0x8f1a48999e34185bULL, 0x2911d14d0321662aULL, 0x5cf1f0df934194c6ULL, 0x05ccd6255c1e6f0cULL},
    {0xea28678cb09490a4ULL, 0x16c4fb267fe44fe6ULL, 0xe464d846674c4c88ULL, 0x0f0e34a64b70a626ULL},
    {0x8f5b1a8a2de0d4bfULL, 0x47dbfcfe350d6483ULL, 0x6157794ca36d0e96ULL, 0x0558531a4e25470cULL},
    {0xb72f5864961f1455ULL, 0x924cadad3f655a60ULL, 0xceea125157683d18ULL, 0x09d3dca9173ed2faULL},
    {0x17d4c722e5bd4335ULL, 0xf23f92d68aaec486ULL, 0x493f866ed03d218bULL, 0x0328cbd54e8c0913ULL},
    {0xee3347dd5329d34bULL, 0xe79e7bcc9798c648ULL, 0x23a487b1a7094e07ULL, 0x2bf07216e2aff0a2ULL},
    {0x111e11a63fe412dfULL, 0xd6f78ed6a6dffc82ULL, 0x6499c583cb76c316ULL, 0x1daf345a58006b73ULL},
    {0x391e6f2293d2c404ULL, 0x1ef39039b2edc7ffULL, 0x46b694c60e182361ULL, 0x176563472456aaa7ULL},
    {0xfb0225035bd3f8dbULL, 0xca964d2b7d1083d4ULL, 0xa3bb5e47d7e33538ULL, 0x2ef1e0fad9f08e87ULL},
    {0x1779ed36c817ae2aULL, 0x9c1803dec5ae8f0aULL, 0x17b2b1f57c731017ULL, 0x226c9b1af95babcfULL},
    {0x35734eb5d4ad0defULL, 0xf8148c89f13fb35dULL, 0x28126b4c3a15ae0fULL, 0x14bce3549cc3db74ULL},
    {0xe550cfd4034212c7ULL, 0xb8e923d301f372f8ULL, 0x742c3373f2635b48ULL, 0x2debff156e276bb5ULL},
    {0xd7d0432d1d4760c7ULL, 0x41afe1b6b29c47adULL, 0xfc2395b22e356b64ULL, 0x2d4083cf5a87f5b6ULL},
    {0x9c317c53d7161c29ULL, 0x91bf79a10c0184d8ULL, 0x34b911262fdc9c1bULL, 0x0c225b7bcd04bf9cULL},
    {0x7b835265f9c9c8f3ULL, 0x99aa0200db66d5aaULL, 0xc33a79bfac91a02cULL, 0x03152169d4f3d06eULL},
    {0x7afe8b7aa7d3199cULL, 0xddc8f51bfdfebbb8ULL, 0xb05974587486d58bULL, 0x0b61811a9210be78ULL},
    {0x046d637a533b6f78ULL, 0xb8ae48acf7048f16ULL, 0xf7eba6a5c5921878ULL, 0x203e000cad298daaULL},
    {0x0757143d1bfa9146ULL, 0xba7ee386fda1112cULL, 0x376672b69f6c9655ULL, 0x1a44bf0937c722d1ULL},
    {0x002f59c5611d4daaULL, 0xb8e0fde75a2106d7ULL, 0x3500afec1a1f56acULL, 0x0376b4fae08cb03dULL},
    {0x3d553ef363182185ULL, 0xd6fc241d3214177fULL, 0x65a2171250fdfc32ULL, 0x00780af2ca1cad64ULL},
    {0xe9d857079bdc31d5ULL, 0xb75dbe18d5221c87ULL, 0xeb808bedfd72a8d9ULL, 0x10774d9ab80c25bdULL},
    {0xb56821fd19d3b6e8ULL, 0x0d03f98929ca1d7fULL, 0x04b1e03b4bd9490cULL, 0x10dc6e9c006ea38bULL},
    {0x70067d00141cac16ULL, 0xb21f75bb60e35961ULL, 0xb2c7645a50392798ULL, 0x00544b8338791518ULL},
    {0x13bc534433ee428cULL, 0x52e105a3b8fa8526ULL, 0x2e2e82eb122789e3ULL, 0x222c01175718386fULL},
    {0x151a1430f608e3c5ULL, 0xb77f7bdb7f7e2b46ULL, 0x59cfb8811b1e0f45ULL, 0x2840d045e9bc22b2ULL},
    {0x508e01fa5860186bULL, 0x04554574c2990196ULL, 0x009c937e468c335bULL, 0x062752f86eebe11aULL},
    {0x55a8e83eaaf04746ULL, 0x1c9950c12a80bc0aULL, 0x87adb87c20a478a7ULL, 0x06041bdac48205acULL},
    {0x2b1dcbbf51f5000dULL, 0x2c7a2ae092f308d8ULL, 0xff900a368949b002ULL, 0x04a533f236c422d1ULL},
    {0x4bde50a2b2d05b2aULL, 0xfe066d1e7dc33df0ULL, 0x11d6a955b3d4f25dULL, 0x13e31d7a67232fd8ULL},
    {0x2f79905bb13920f1ULL, 0x9279d1648ff2c95dULL, 0xfbc13d6357e8599aULL, 0x011c2683ae91eb4dULL},
    {0xa1ecaed015aaf6aeULL, 0xd56c928e3e2c2bd0ULL, 0x25b1a270e0b4cba5ULL, 0x0b0d219346b85745ULL},
    {0xd84c7a726b5f1364ULL, 0xb65080781ef9fd13ULL, 0x70291ee638690209ULL, 0x14abdec8db9c6dc9ULL},
    {0x988d0376610be106ULL, 0x01eb12202ef47cedULL, 0xfcd32aa3d2664788ULL, 0x1a0b70b4b26fdc28ULL},
    {0x2704882e7278b607ULL, 0x6401deb2ef99c4d1ULL, 0x7b6943f9804e7fe5ULL, 0x278543721f96d130ULL},
    {0xa36535e011d58259ULL, 0x3f0738a325638d8bULL, 0x57866214dbd1473fULL, 0x16eb59494a9776cfULL},
    {0x41c3479dcf8c644aULL, 0x9a9e53eeab6b7f8cULL, 0x4f240088fa5524c6ULL, 0x2567a658a81ffb44ULL},
    {0xb882ade840bb13d8ULL, 0xab78e0215a5715a6ULL, 0xa7ab39f1abd9cf77ULL, 0x29aa1d7c151e9ad0ULL},
    {0xe206b91f99f2c984ULL, 0x6a4f017f9a85388cULL, 0xd4bbfce2b3641500ULL, 0x15c091233e60efe0ULL},
    {0xeb679a8115f014cfULL, 0xe7673ad5f1915f9fULL, 0x0882c2c999558d77ULL, 0x16bd7d22ff858e5eULL},
    {0xffe6769250042025ULL, 0xc0182d9b668b8e08ULL, 0xb2c2e13ed6ef4074ULL, 0x02db50480a07be0eULL},
    {0x13ba866343b73119ULL, 0x86330ef2bf7adb4cULL, 0x7b6806ec9d6cdba1ULL, 0x05e4a220e6a3bc9fULL},
    {0x104d37f1cbcf7a42ULL, 0xb5f70bc424d39fa4ULL, 0x98cbf2a5ee3b50e8ULL, 0x1dda05ebc30170bcULL},
    {0xcd301f22b0de8990ULL, 0x91da214414d89ba5ULL, 0xf645b6fee3667f3cULL, 0x0184bef721888187ULL},
    {0xad1a6d64341b78ecULL, 0x37414b84494e1577ULL, 0x5f5e8276f62aef1cULL, 0x1498a307e6890006ULL},
    {0xfe33548ad46bd49dULL, 0xcef737b8fab1f864ULL, 0xf4939800b9d2c3eaULL, 0x25f40f82b31dacc4ULL},
    {0xcb1ff31ce5bb9650ULL, 0xe83056ce4907bfbbULL, 0x3f6f5862a30d2ea9ULL, 0x09d317cc67025194ULL},
    {0x29b913b6cf3149d0ULL, 0xa41132cd467a86abULL, 0x3ba4ce4a4c1b3bd0ULL, 0x2f77d77786d979b2ULL},
    {0x52f89e785f729bbfULL, 0x1bbd336963f254c1ULL, 0x73dc266b6fccc684ULL, 0x0f53dafd535a9f44ULL},
    {0xde96de85deef2fa2ULL, 0x0e6976e1c00baf16ULL, 0x65c3a099e17526faULL, 0x25c1fd72e2230452ULL},
    {0x893e65d6ce4a8f62ULL, 0x41af95c84eaea3cfULL, 0xe368d385d52d16beULL, 0x2a902c8980c17faaULL},
    {0x5527405762f83529ULL, 0x6676dd114d1dc8d2ULL, 0x02878c8976b82be9ULL, 0x1ce1580a3452ecf3ULL},
    {0x2fc50f7f0f4d0056ULL, 0x01c5ec569609034dULL, 0xa49a1fa306df0088ULL, 0x24a6073f91addc33ULL},
    {0x7f256c68b0be2b74ULL, 0x83e07ca554b5d157ULL, 0x9fc27fe306d71d45ULL, 0x25e52dbd6124530dULL},
    {0x6796e5b6cd70f15dULL, 0x5974be4d0a7b2994ULL, 0x93468dbccfb02985ULL, 0x23dffae3c423fa7aULL},
    {0x99591bc9924ed6f5ULL, 0x80615d50be36243aULL, 0x49b77594f6b027c4ULL, 0x06342da370cc0d8cULL},
    {0xcc7df0d8e9f63925ULL, 0x4778303d0405c1b4ULL, 0xb75f09f115fc751bULL, 0x2754114281286546ULL},
    {0xb59ee197f8187cf5ULL, 0xabf214153833d7bdULL, 0x862c2bc1d119eddeULL, 0x15c19e8534c5c1a8ULL},
    {0x79b4b3d2d77d5f3eULL, 0x366f3be0a8210616ULL, 0xb4c78d0d9ef3cabeULL, 0x265fe062766d08faULL},
    {0x8debfd098d3ec7beULL, 0xd377ac5cd0146f04ULL, 0xf22cb7cd0ac3a327ULL, 0x13ccf689d67a3ec9ULL},
    {0x9fbccca4524aaebdULL, 0xd92a5e05bdf3fe6bULL, 0xf81cd3974827a887ULL, 0x17662f7456789739ULL},
    {0xe809fd624be7ad5dULL, 0x82ca6a5cca70cee4ULL, 0xef18631e515f7f2fULL, 0x21b29c76329b31c8ULL},
    {0x939eb17b01fa975cULL, 0x9c06738165215319ULL, 0x441eb97fe2790198ULL, 0x18137478382aadbaULL},
    {0x39ceec4668f37e88ULL, 0xd34f761935ffd3b7ULL, 0xdc724f5fef2b37c2ULL, 0x2bc07ea2bfad68e8ULL},
    {0x0e602077aef9a03eULL, 0xb4173203c2bd94adULL, 0x563840480df993feULL, 0x2ddb2e376f54d64aULL},
    {0x8adb25373596c3f7ULL, 0xe8a20f8d72f61370ULL, 0x06b41cb24c602609ULL, 0x277eb50f2baa7061ULL},
    {0xbb7f87734c9a1fe5ULL, 0xb33fc4b450c0db50ULL, 0x9d0c620904f01a56ULL, 0x0d4de47e1aba3426ULL},
    {0xae908d0279a29f0cULL, 0x9f445697058f134aULL, 0x428673b6bd3eea6fULL, 0x0b8442bfe9e4a1b4ULL},
    {0x74247fddb720f8f5ULL, 0x26e186a65945e965ULL, 0x6e06930cb89f7d4aULL, 0x11fe5b18fbbea1a8ULL},
    {0x170e4ad89c33a0d6ULL, 0xdf5b774dcad4d883ULL, 0x4d25d8f6d9f90021ULL, 0x224026f6dfaf71e2ULL},
    {0x1bc9f9c62bbeb824ULL, 0xa96bc9e37d1091f6ULL, 0xe0704dad58d03465ULL, 0x0b2ca6a999fe6887ULL},
    {0xa1a7e0c96529f421ULL, 0x1d0a4ce41d364797ULL, 0xd40c54053a28a06bULL, 0x221b63d66f0b45f9ULL},
    {0xdce2f4836bb84ad4ULL, 0x7493bce64d4d24aeULL, 0x3d4120801b047d08ULL, 0x30185c48b7b2f1d5ULL},
    {0xf8267318632a61f0ULL, 0x533356f0faa48f27ULL, 0xa989e223056227d3ULL, 0x23f5d372a3f0e3cbULL},
    {0x8e6dfbe4328f3e3bULL, 0x88e1e0090d06162eULL, 0x1bf8235ea162b1f3ULL, 0x2716683b32c755fdULL},
    {0xc930c69748d5d4bcULL, 0x3d140770c80ac67dULL, 0x04ca1d853ec0909eULL, 0x0977545836866fa2ULL},
    {0xe81c43c0f9434b31ULL, 0x5f51682d31472b05ULL, 0x025d91ab4982dd42ULL, 0x1444e8f592bdbfd8ULL},
    {0xa00f874e7718fbe3ULL, 0xbe3ffbfe583f7012ULL, 0xbeb74a1c5cb8fee8ULL, 0x26e04b65e9ca8270ULL},
    {0xdf69816fb1a914d2ULL, 0x00f48f4febe29ad6ULL, 0x34ee47a5cd9f8698ULL, 0x22a5c2fa860d11feULL},
    {0x9f7474dd44c5c8d7ULL, 0x7ec338f3a0964c62ULL, 0x6afd672a738f4273ULL, 0x174b54d9907d8f5cULL},
    {0xd56c871907b39b87ULL, 0x8d2189b87c8c8143ULL, 0x1168fa66694cf280ULL, 0x1db1db8aa45283f3ULL},
    {0x387341d813d1bfd1ULL, 0x6f65faf8cce0ab66ULL, 0x9030b8c7b7dfde12ULL, 0x1530bf0f46527e88ULL},
    {0x89330a2f2bade457ULL, 0x36ead9edc8f28148ULL, 0x9f01c1cec8760e99ULL, 0x0b73f613993229f5ULL},
    {0x7bd2dc0f36bcf41eULL, 0x587ab977fc822778ULL, 0x4552aaea377f448dULL, 0x29c25a22fe216460ULL},
    {0x77df57d77c875526ULL, 0x7abe82795dc272b3ULL, 0x8503da66c92cf407ULL, 0x2b30d53ed1759bfbULL},
    {0xcf5f0a2916787cd2ULL, 0x756c08c85ede7227ULL, 0x7b7b7e69359d53a2ULL, 0x12f6d703b5702aabULL},
    {0x1ffa9ac706364113ULL, 0x55ad01071028d484ULL, 0x61a40a0b8837293aULL, 0x2520e18300afda3fULL},
    {0xc68f09fa03b8b95fULL, 0xac9bc59278277393ULL, 0xdda8ed4f346fa967ULL, 0x1ec9daea860971ecULL},
    {0x08aae24b830ad725ULL, 0x83bf5cbf70ed407cULL, 0x432f5cd5bef8fe44ULL, 0x0a99b3e178db2e2eULL},
    {0x317abad7c5778492ULL, 0x07ee0abac3c817a1ULL, 0x086b89b601c2bbe4ULL, 0x07cda9e63db6e39fULL},
    {0x5d48aab38f8fc3a3ULL, 0x49bd8290963203b3ULL, 0x52d571b191bb0adbULL, 0x08c9c65a4f955e89ULL},
    {0x3801c9c17bdd9c9eULL, 0x9af54a2a3f2719d3ULL, 0x49590ddbfbd709edULL, 0x2737f8ce1d5a67b3ULL},
    {0xa9f179ba627f7d6aULL, 0x909432bd0c129813ULL, 0xd28770072798e8b7ULL, 0x1049a6c65ff019f0ULL},
    {0x60a5122361daeddbULL, 0xde8868944fdf64eeULL, 0xc0ea5a9beb27cecbULL, 0x18b4fe968732c462ULL},
    {0xa4f7473483885d19ULL, 0xa6f478cfcf11f1b2ULL, 0x440b2eaeeefa8c02ULL, 0x2ff2b6fd22df49d2ULL},
    {0x8a1b352f5cef42ffULL, 0xe8be4057cbd8dbd1ULL, 0xe56c789b8f6bbcb3ULL, 0x2ec5f2f1928fe932ULL},
    {0x08c1d100378e545eULL, 0x424a4c6a7794ee3fULL, 0xe33ad9f75bf3426dULL, 0x265a5eccd8b92975ULL},
    {0x20517da1dfd4279cULL, 0x778e656cfcb366bfULL, 0x9d6242bb5ada0e68ULL, 0x2405eaa4c0bde112ULL},
    {0x76dd98a2dbf60417ULL, 0xfdb51955d8b2d66bULL, 0x88018004cbbf2bc5ULL, 0x094c97d8c194c42eULL},
    {0x330c9625c2afe0b8ULL, 0x508b705221e6a686ULL, 0x22b9979a605bf64dULL, 0x2c30d5f33bb32c5cULL},
    {0x6aa2fc716fdb6cf5ULL, 0x4886ea583e87299eULL, 0x25d01cc6dcb1622dULL, 0x01a75666f6241f68ULL},
    {0xf47bf2e87d382fcbULL, 0x6d359ab9a66979fcULL, 0x4d12ac091e87be7cULL, 0x0a3290e8398113eaULL},
    {0xecd21bf69aa0cc74ULL, 0xc31219d8fa0dfc75ULL, 0xfeb38461425bb0d8ULL, 0x154ade9ca36e268dULL},
    {0x13a4b5095d028772ULL, 0x99231ef5dc69d8dcULL, 0x1b172d79c6f22eeeULL, 0x27aa8d3e25380c0bULL},
    {0x9d395bbcbd806461ULL, 0x56bbdf485afa1f54ULL, 0x1a8b2e3bca6099d7ULL, 0x2cf4051e6cab4830ULL},
    {0xb0843d7f84b23e71ULL, 0x5131feab8afa5eebULL, 0x1d3f517ddff9f201ULL, 0x301e70f729f3c94bULL},
    {0x17a8d7a4c91f83bcULL, 0x32dc4cef113ae60dULL, 0x8b4d9620347ab023ULL, 0x298beb64f812d25dULL},
    {0xcf11a3f02e46aa95ULL, 0xd1c14a15b221680aULL, 0x4d03fd291c3c471eULL, 0x1b362e72a5f847f8ULL},
    {0xbc1d9ba41dc1c737ULL, 0xaa1ef6e78e1e5ebcULL, 0x75432902999223d5ULL, 0x0dc8a2146110c0b3ULL},
    {0x08afa1eb922ff279ULL, 0xcb21729a72ddc03aULL, 0x05dc93092cb69778ULL, 0x0a48663b34ce5e1cULL},
    {0x545bb314881098eeULL, 0x0fe46f143b702d74ULL, 0x6096b64a82f9e95fULL, 0x0a87391fb1cd8cdfULL},
    {0x82ba8a2a0892fd5dULL, 0x8826edd7ea9c29f3ULL, 0xf0512ff8e6ca362fULL, 0x1b5b2946f7c28975ULL},
    {0xb4eac1f533315b6bULL, 0x173a8bbcb8a5b987ULL, 0x47ebe2239219bc6aULL, 0x01001cf512ac241dULL},
    {0xc72beb17d8358a32ULL, 0x7ac093d3fb5f5febULL, 0xf704fa7d7693da72ULL, 0x2fd977c70f645db4ULL},
    {0x9be763a97793a9c4ULL, 0x761d5355c05444d9ULL, 0xc2d7cc688164f39eULL, 0x23c0039a3fab4ad3ULL},
    {0x9f27f22ff03fa25dULL, 0xaec356cf435888e7ULL, 0x2c9c0df6161eaac1ULL, 0x19d43ee0c6081c05ULL},
    {0x919f9d5ca1cefe59ULL, 0x8bf29b646d020830ULL, 0xfddccffd94a56302ULL, 0x2d9b10c2f2e7ac1aULL},
    {0xdae2f2b9f83e4267ULL, 0x2799283e166fc81cULL, 0xc47e4aff5a66f5ceULL, 0x2457ca6c2f2aa30eULL},
    {0x044dfb54a7c10b35ULL, 0x811ee8676ed6f0c3ULL, 0x5820592445094022ULL, 0x0abc392fe85eda85ULL},
    {0x1d2c2bc30eac1eb0ULL, 0x1161ac3993acf310ULL, 0x0cebcd37f3ea54f3ULL, 0x19d2cc5ca549d1d4ULL},
    {0xa3d3ab546e98c9c8ULL, 0x3ee0e4ec041ba644ULL, 0x08aafb26ae13cd39ULL, 0x0f97ae3033ffa016ULL},
    {0x8a166496e88cfecaULL, 0xfa15537ea4e168e8ULL, 0x260e404cf1d427a7ULL, 0x16dbc78fd28b7fb8ULL},
    {0x1827820366d5e07bULL, 0xef8344e576f8ad3dULL, 0x16f085f73bc4f22eULL, 0x240faf28f11499b9ULL},
    {0x46f8cab58d9ef1afULL, 0xeaba808c8fdb6dbfULL, 0xfe6c8531e55e1770ULL, 0x0a1bb075aa37ff0cULL},
    {0xc4a705a7ce089f4dULL, 0x38d5b085ac1042fdULL, 0xa6a853aaf3a644caULL, 0x2e47e15ea4a47ff1ULL},
    {0x5fb14528375772b6ULL, 0x673ab059935f4df3ULL, 0x860ca4a9c09d39e1ULL, 0x166e5bf073378348ULL},
    {0xed10f96538f0916fULL, 0x0cacccd027233001ULL, 0xaf235902f057a274ULL, 0x18b42d7ffdd2ea4fULL},
    {0x21deab1051c37702ULL, 0x4fc368020b3ed382ULL, 0x4914788e3e3c7eadULL, 0x089cb1b032238f5eULL},
    {0xd9e70863451dd8d1ULL, 0x89f9339c7b971921ULL, 0xaf7c7076dd165adfULL, 0x242acd3eb3a2f72bULL},
    {0x74af860457245c3bULL, 0xeac9a068283f3264ULL, 0xbf47f2bd82fce896ULL, 0x174fbb104a4ee302ULL},
    {0x780c275fe1116c6bULL, 0x2891fb2bb318613fULL, 0x61f3058ce092c67dULL, 0x17340e71d96f466dULL},
    {0xa2fd380c4df7f6b2ULL, 0xf098b9f8fd455953ULL, 0xf00f2e383982d024ULL, 0x1e8e40ac853b7d42ULL},
    {0xbf40f92938e2e961ULL, 0x5198c55cad66e8a9ULL, 0xe1d4d5e284b8d107ULL, 0x0529898dc0649907ULL},
    {0xf65f21c4d4e5df8fULL, 0xe8c77aa017ee1d7bULL, 0xbf7de5bb797364dcULL, 0x2162754db0baa030ULL},
    {0x21bef44741752ec6ULL, 0xa9f9291efbde4c84ULL, 0x3ceb250ae00c58c2ULL, 0x12c7553698c4bf6fULL},
    {0x9cb723136526508eULL, 0xa733c93353e9d9c7ULL, 0xfcb8c5279313bd51ULL, 0x292643e3ba2026afULL},
    {0x1db6e74d5b87d158ULL, 0xb6c07c5d98e66ff7ULL, 0x1d52951bea990bd5ULL, 0x00ccf13e0cb6f9d8ULL},
    {0xb0f86c15ab645b4bULL, 0xb6723873cb30fc22ULL, 0xdd654128cf2f3aaaULL, 0x185d1e20e23b0917ULL},
    {0x13fe53f8d8764e1fULL, 0x6778e3de0f024c0fULL, 0x742bdf11c60efa18ULL, 0x14c61c836d55d3dfULL},
    {0xd03ee1195d72449eULL, 0x2919e2af53008184ULL, 0xe5dbe4680457691cULL, 0x0f356841b3f556fcULL},
    {0x0c0a6b6e8fa5b3e8ULL, 0x83143374fd2080baULL, 0x5df124f887bf40b3ULL, 0x1b8fd9ff39714e07ULL},
    {0xe9103418796f6024ULL, 0xfc3c8ae04e9df0b3ULL, 0xa3f873924e2aaa14ULL, 0x0e86a8c2009c140cULL},
    {0xb0861421e79155c8ULL, 0x373fc43820ca2b16ULL, 0x0e5462ad932fcdd2ULL, 0x2e6c5e898f554777ULL},
    {0x2ce5fd5a0c014604ULL, 0xff9fe1a0ecd37797ULL, 0x7c14f9d1df032bc9ULL, 0x05d797f1ab364723ULL},
    {0xca8929851da8c008ULL, 0x1daf2dcd65519ef5ULL, 0x6c3d152875981d0cULL, 0x29a3110463a5aae7ULL},
    {0x4b732f8163883314ULL, 0xdc71640a8bbd1f86ULL, 0x73c3a4b91c05354cULL, 0x2974da7bc0743222ULL},
    {0xcce9c522889b47dcULL, 0xa29cb91aa082c8bfULL, 0xb2a30621c05eb12cULL, 0x1ed0fb06699ba249ULL},
    {0xd80c8ae36e40fe9bULL, 0xae29e8c572eca912ULL, 0x654ff26d8d863feeULL, 0x1c793ef0dcc51123ULL},
    {0xfbb4a8770977dc2fULL, 0x8c91e82589a78169ULL, 0x7956257d3d234ef1ULL, 0x1e6aac1c6d3dd315ULL},
    {0x8fcda33256fb6bf5ULL, 0xd037748080a47d94ULL, 0xe6273dd6fa98b25eULL, 0x1a20ada7576234eeULL},
    {0x35d49306728af96cULL, 0x642d772045ece513ULL, 0xfc7a9a23a6fd9996ULL, 0x191033d6d85ceaa6ULL},
    {0x32ef481f5d06297bULL, 0xc76f200b3740b8b2ULL, 0x3a825aa6fddc3abfULL, 0x006e5979da7e7ef5ULL},
    {0x1eff8c0174cdb06dULL, 0xfbd57f596c8f2983ULL, 0xbef3e68d417e9fa0ULL, 0x0b0d7e69c651910bULL},
    {0x2c4b20a25c9cdf9dULL, 0x4ac46dbbb033c511ULL, 0x16435ec084e2ecd4ULL, 0x25caf5b0c1b93bc5ULL},
    {0x085b2f150f72472aULL, 0xf7f77442d62fd4c8ULL, 0x9af8b796d9645872ULL, 0x12c1ea892cc31e0dULL},
    {0x1de6dadc78c32aaeULL, 0xe5a929d9f928b9b8ULL, 0xb8bbe3afeb245feeULL, 0x16af29695157aba9ULL},
    {0x68d31084256b67dcULL, 0x705b87ec5a4cfdc1ULL, 0xd687fb2f3be18691ULL, 0x0136df457c80588dULL},
    {0xb95a285060e7b089ULL, 0x9e07b1efbc74434dULL, 0x6aea984fba6e7147ULL, 0x1639a28c5b4c8116ULL},
    {0x7e232bd9b5ca9b76ULL, 0x816c28b700bdc50fULL, 0x13f8e650f587ec06ULL, 0x03d62fbf82fd1d43ULL},
    {0x249830de1edfde54ULL, 0xf77a1e40fc6da97cULL, 0xb4d14aaddca3cfe2ULL, 0x11aeeb527dc8ce44ULL},
    {0x642b645807bfc824ULL, 0x6a670e6bc68c7a49ULL, 0x79c5e6138c6c8ee3ULL, 0x13f9b9a412741294ULL},
    {0x506cae8b7ebcd15bULL, 0x5ddeeed7a939440cULL, 0xc8484cd26c7c1f63ULL, 0x0e4772fa3d75179dULL},
    {0x39fc46a68c5d4db4ULL, 0xb5971752067a612bULL, 0xde4bdec58febe8d8ULL, 0x1b39a00cbc81e427ULL},
    {0x444d1c0a3a25707eULL, 0xf66463c2eb54a245ULL, 0x71e16e2953f48731ULL, 0x2bedb66e1ad5a1d5ULL},
    {0x7379ce35da915decULL, 0xb08b193b608582a2ULL, 0x8abd068f06a7287fULL, 0x2cf0a09a55ca93afULL},
    {0x753c8fb863efb387ULL, 0x7d1a512050ba7db0ULL, 0x88830cabfef2f8d2ULL, 0x2d1bd78fa90e77aaULL},
    {0x630d7fd283dc3394ULL, 0xf7c0d49c1387062eULL, 0xf423d3071eb83539ULL, 0x065610c6f4f92491ULL},
    {0x642fb464bd607368ULL, 0xcc5f9969033f15ecULL, 0x5013b12873452bebULL, 0x2d933ff19217a554ULL},
    {0x3c49c8aa99e0258bULL, 0x00dae5354e79508cULL, 0xf76b92b3e13b30d5ULL, 0x1aa9d3fe4c644910ULL},
    {0x78cea1f1c8450bddULL, 0x27095fa773e1aca0ULL, 0xc748638c59111c6bULL, 0x027ef04869e482b1ULL},
    {0x02e3fa136ad0b8fbULL, 0x9f67a2605d9ec038ULL, 0x15db4e00668a8c44ULL, 0x2b7d524c5172cbbbULL},
    {0x3f7c3c1dd735db0fULL, 0x4693ae25b1e55df1ULL, 0x7c8718d86747c7f7ULL, 0x0c7c382443c6aa78ULL},
    {0xa627dcdd9bd79078ULL, 0x7a1f43c2d30d0fe4ULL, 0x62a7b56acf4f7620ULL, 0x00b4567186bc3f7cULL},
    {0x0337490883db4fd5ULL, 0xb07fe739e4c1e61dULL, 0xe6d61737fe08b47fULL, 0x1e41fc29b825454fULL},
    {0x002ae8d3ba0653b6ULL, 0x21e1af872d8c0e89ULL, 0x72ee6dafc6165844ULL, 0x12507cd556b7bbccULL},
    {0xd77d3e97f71cb5dbULL, 0x97eb36617ef36fe4ULL, 0xcef312e5e6f52a5dULL, 0x13d437083553006bULL},
    {0x4686077c6a4486d5ULL, 0x467d90b22f0b3866ULL, 0x687222487dda9a65ULL, 0x163ec73251f85443ULL},
};
inline constexpr uint64_t kMds4[16][4] = {
    {0x87947223ae5108adULL, 0xe5e39942296127fdULL, 0x8a351dd786dd7a1dULL, 0x236d13393ef85cc4ULL},
    {0x3cedc821b2a7ae19ULL, 0x967f1dc58718e59eULL, 0xc4a9b194e10724ebULL, 0x277686494f7644bbULL},
    {0x84a4529e66b09c62ULL, 0x5129c16479973b0aULL, 0x0b85618826a9b350ULL, 0x023db68784e3f0ccULL},
    {0x7b3a75646ff382c1ULL, 0x8af08cdbd63017c5ULL, 0xd50d663bae733f97ULL, 0x1d359d245f286c12ULL},
    {0xf049bc970e841a0cULL, 0xfe9bc7fb1f70943fULL, 0xb525be259699ab28ULL, 0x2a75a171563b807dULL},
    {0x6f38ce4157b6770eULL, 0x08b4dd3e15ccc370ULL, 0x78e2827d092e1ae8ULL, 0x083abff5e10051f0ULL},
    {0x68a9ff8253a1eb6fULL, 0x24d5c4741eab8b75ULL, 0x7dc49cfdbae303adULL, 0x1a5ad71bbbecd8a9ULL},
    {0x790f725c5d84f0afULL, 0x945004a7bc2c59e8ULL, 0x86772133640f02ceULL, 0x0d745fd00dd167fbULL},
    {0xf366b3e521c4ed42ULL, 0x497ad2eecbaa7e42ULL, 0x592a52ca9cef820dULL, 0x2070679e798782efULL},
    {0xb3a2be979e2d7eabULL, 0x06ece318cd224ab6ULL, 0xf800739a53da75d9ULL, 0x2e18c8570d20bf5dULL},
    {0xfa283c6aa723b608ULL, 0xf2e4386d3e5b9f38ULL, 0x7f3367ce86f684f1ULL, 0x0fa86f0f27e4d3ddULL},
    {0x3f0c2491e0b403ebULL, 0x57035ee3da6b2ca8ULL, 0x28168e4b14dbaeb6ULL, 0x03f3e6fab791f166ULL},
    {0xba8b3d30958e7677ULL, 0x8ff0613fd79375f8ULL, 0x2488540e41f783b6ULL, 0x2f545e578202c973ULL},
    {0x596a15623d01476eULL, 0xb8104c32ba4cd701ULL, 0xbff7eefeae3faf4bULL, 0x23810bf82877fc19ULL},
    {0x207ed58d2a34cdd6ULL, 0x1c068ef930f10be2ULL, 0xeeafc4944034cf32ULL, 0x014fcd5eb0be6d5bULL},
    {0xbb661c25d20fb52aULL, 0x8ba4a8b627627cc2ULL, 0xd835eae0823e377fULL, 0x00c15fc3a1d5733dULL},
};

// width 5: 340 round constants, 5x5 MDS
inline constexpr uint64_t kRoundConstants5[340][4] = {
    {0x4f3c2bd81a6da891ULL, 0xd889bb4ebd47c386ULL, 0x7f53e29ccac98ed7ULL, 0x0eb544fee2815ddaULL},
    {0xba733f28475128cbULL, 0xa197aeb12ea64713ULL, 0xf02fdba7dd737fbcULL, 0x0554d736315b8662ULL},
    {0xf5087c58d5e8c2d4ULL, 0x54907df0c0fb0035ULL, 0xbcd748056307c377ULL, 0x2f83b9df259b2b68ULL},
    {0x1915208f5aba9683ULL, 0x61f15f8b41a75ef3ULL, 0x2447ac83052451b4ULL, 0x2ca70e2e8d7f39a1ULL},
    {0x4ec719cb83ecfea9ULL, 0x994196f12ed22c5dULL, 0x91b04d7222271c94ULL, 0x1cb5f9319be6a45eULL},
    {0xb9ea08d18446c122ULL, 0x21c7bb47b93750c2ULL, 0xf8a42192de7ff616ULL, 0x2eb4f99c69f966ebULL},
    {0xd5f7d099e299520eULL, 0x0fc7da8b93ee13b6ULL, 0xc5198169e405d9eaULL, 0x224a28e5a35385a7ULL},
    {0x23796b993bbd82f7ULL, 0x36f33ecbd9a0f978ULL, 0xd8afdd6afca49c30ULL, 0x0f7411b465e600eeULL},
    {0x0626f9ff5d90e4e3ULL, 0x19b208ae3370f99aULL, 0xa2be7150392d8d98ULL, 0x0f9d0d5aad2c9555ULL},
    {0x6a12d30702d6fba0ULL, 0x9732b25259cf744bULL, 0x6f52a59538d32922ULL, 0x1e9a96dc8292bb59ULL},
    {0xc2cd4d528fb3fe3cULL, 0x3cfe52eab4b945c6ULL, 0x887d578c45555e59ULL, 0x08780514ccd90380ULL},
    {0x59f119d629ccb5fcULL, 0xced64717e3556d5aULL, 0xc8149fa3f73ef8c2ULL, 0x272498fced686c7aULL},
    {0xe3d0ef8a782ef7dfULL, 0x45bd350aff585f10ULL, 0x4b7cb80930bd06ebULL, 0x01ef8f9dd7c93aacULL},
    {0x97ea0ae754934d30ULL, 0x8e886e64bf3c40aaULL, 0x4dc08f222b469b13ULL, 0x045b9f59b6595e61ULL},
    {0xadf2584295d61c66ULL, 0xa3e41e24e247a387ULL, 0x9fd6f59d2a40ff8eULL, 0x0ac1e91c57d9da91ULL},
    {0xd12e68f04e62d134ULL, 0x0fd67061aee99979ULL, 0xc7f9a421353cd89dULL, 0x028a1621a94054b0ULL},
    {0xd02aae2a0dcd9dbcULL, 0x50c19c3fb3c96d09ULL, 0x9632647ed059236eULL, 0x26b41802c071ea4cULL},
    {0x4af34384aedb462bULL, 0x05c9de06758db6a9ULL, 0xbaac2f63e468215eULL, 0x2fb5dda8072bb72cULL},
    {0xdd05c56ee894d850ULL, 0xad8ab8ba2a18d383ULL, 0x44ff3547fd823249ULL, 0x2212d3a0f5fccaf2ULL},
    {0x5cd0c7eed465e2e3ULL, 0xa3276fdb19f44c01ULL, 0x58e4dfaeea09be56ULL, 0x1b041ad5b2f06842ULL},
    {0xa91e64afb1500effULL, 0x144fb7e3ac14e846ULL, 0x8eccff33e76fded3ULL, 0x0a01776bb22f4b6bULL},
    {0xf7936440810ace43ULL, 0xa4f33ae8c15cf827ULL, 0xf34d3f275066d549ULL, 0x2b7b5674aaecc3cbULL},
    {0x4c1b803381a3bdfdULL, 0x60b042257b78fc00ULL, 0x4cf75779ed54b48cULL, 0x29d299b80cd4489eULL},
    {0x19dde30424be401eULL, 0xa427110032b5e1ddULL, 0x57641c219d721a74ULL, 0x1c46831d9a745293ULL},
    {0x739ae1d883e91269ULL, 0x36296c0657674f80ULL, 0xf37141dc34d578e0ULL, 0x06d7626c953ccb72ULL},
    {0x0f108c71cda2930cULL, 0xdc5c440a3022cd96ULL, 0xc54002748e0c410eULL, 0x28ffddc86f18c136ULL},
    {0xb8ec0619f6fbc5e9ULL, 0xbe67f1b7ed2ab6adULL, 0xf85deed09e400b17ULL, 0x2e67f7ee5e4aa295ULL},
    {0xe7abf22c24e80f27ULL, 0xca56859ef759e53cULL, 0x0e97f25114a79a2dULL, 0x26ce38fa636c9063ULL},
    {0xafacb4c4cfd35db1ULL, 0x42cb3d16a1f72721ULL, 0x4dd7a01d00a7ffecULL, 0x2e6e07c3c95bf7c3ULL},
    {0x384b1470da24d8ccULL, 0x8890d276612e1246ULL, 0x5f91d7961c3a54fbULL, 0x2aa74f7597f0c9f4ULL},
    {0x2ec0ca639b7f73feULL, 0x8a71313c1509183eULL, 0x2c7c090f668ab45bULL, 0x287d681a46a2faaeULL},
    {0x11e29f3305e73c04ULL, 0xa5d3106ff565aa3bULL, 0xf4a40600528f3d7dULL, 0x212bd19df812eaaeULL},
    {0x3809c28404713504ULL, 0xf97fd9740926dab9ULL, 0x1aafb14b350eb860ULL, 0x1154f7cf519186bfULL},
    {0xda747e79661fc207ULL, 0xbf5152905be36583ULL, 0x4637810a4bd1b16fULL, 0x1dff6385cb31f1c2ULL},
    {0x63ea3c606b551e5cULL, 0x4011a34d54762528ULL, 0xc081d34c44c18e42ULL, 0x0e444582d22b4e76ULL},
    {0xff72d3aab7e4eff8ULL, 0x815773e9c2846323ULL, 0xabab6638328f02f1ULL, 0x0323c9e433ba66c4ULL},
    {0xb70f2c6876a9c29dULL, 0x25b8cf002740112dULL, 0x193bba79cdec448fULL, 0x12746bbd71791059ULL},
    {0xfd049eb4438a2240ULL, 0xd466c837cf50d73eULL, 0xfd9b9d3751842c75ULL, 0x1173b7d112c2a798ULL},
    {0x5fdb4808703243daULL, 0xa8e5713b25026ebeULL, 0x76d1e555d7fed13dULL, 0x13d51c1090a1ad48ULL},
    {0xf4a58ebeb956baa1ULL, 0xcb72743f0394efe7ULL, 0xff8dcb7cbd2d9743ULL, 0x00874c1344a4ad51ULL},
    {0xa32a562074fef08fULL, 0x0eea48d3546e97d6ULL, 0x65ce236b07f244faULL, 0x22df22131aaab858ULL},
    {0x8bf5eb05a919f155ULL, 0x984524a59101e6c1ULL, 0x8708b437a445fc3eULL, 0x0bf964d2dbd25b90ULL},
    {0x69b435b5fc502f32ULL, 0x640b9d73a9ab298cULL, 0xa302be1f7f181e0eULL, 0x09b18d9b917a55bcULL},
    {0xd6745a5067289e43ULL, 0xfbbbc70a6365366dULL, 0xa4bfc1d5bf3dc05bULL, 0x094f5534444fae36ULL},
    {0x784fddc0dc23f01fULL, 0xa3e240c0da5701cbULL, 0x519fa6622af53a15ULL, 0x2999bab1a5f25210ULL},
    {0x69575a11b03a3d23ULL, 0x84301bce8a93d136ULL, 0x1ca94db73710e880ULL, 0x2f6898c07581f637ULL},
    {0x62174b1a6866fccbULL, 0x565deb1e8e5742f8ULL, 0xec16d7e1318a4740ULL, 0x07268eaaba08bc19ULL},
    {0xa6c9582c41a0529fULL, 0x62603e078e1c6689ULL, 0x1339ff77113bc9ebULL, 0x186279b003454db0ULL},
    {0x0768e5524737172cULL, 0xb67e2cc5de9a2275ULL, 0xe4915bdd04d3e5ddULL, 0x18a3f736509197d6ULL},
    {0x7b5987b87085671dULL, 0x725e2d4bcb2d3a00ULL, 0x77cc1e2ed24c808cULL, 0x0a21fa1988cf38d8ULL},
    {0x0b36a135e785fba2ULL, 0x8328c184a2c43bc0ULL, 0x1faf5ef6a6462522ULL, 0x15b285cbe26c467fULL},
    {0x8cd28de3e779f161ULL, 0x0b7775b7c902f578ULL, 0x8c08b8c3f9806d56ULL, 0x164b7062c4671cf0ULL},
    {0x7a24f651249baa70ULL, 0x61c61d3d43b6e65dULL, 0x86d9865fe7e50ef3ULL, 0x0890ba0819ac0a6fULL},
    {0xcc2ee0aed543e922ULL, 0xa627ac5cb0eb878cULL, 0xa42712e5a721e4eaULL, 0x2fbea4d65d7ed425ULL},
    {0x103d7f5f379abaaaULL, 0x7b70a58e854ab9b9ULL, 0x540303a3b536f85eULL, 0x0492bf383c36fa55ULL},
    {0x6a969d56292dc24eULL, 0x1d6185a9ce85675fULL, 0x4e20251c565142d6ULL, 0x05e91fe944e94410ULL},
    {0x7e380a76e36e6c1cULL, 0x995b9621e6e49c3bULL, 0x93d463cb041acad0ULL, 0x12fe5c2029e4b338ULL},
    {0x06cd01dc6fa0784eULL, 0x1f2629fadc894969ULL, 0x958f772392147413ULL, 0x024154adf0255d47ULL},
    {0x8813c13457a45550ULL, 0xd798815644f2bbdeULL, 0x36ed2462a86bd0baULL, 0x18824a09e6afaf4aULL},
    {0xbb06983e3d5d58a5ULL, 0xdf84a630af68d50bULL, 0xe9f255de0c3dbdddULL, 0x0c8b482dba0ad51bULL},
    {0x441392878fdb05e6ULL, 0x5a4fa67fcd6aaf86ULL, 0x363e0a1667d3b67cULL, 0x17325fd0ab635871ULL},
    {0x1cc6d0e911fa402eULL, 0xe550773fa8d18bf7ULL, 0x122f5af67b690f31ULL, 0x050ae95f6d2f1519ULL},
    {0x5771ec84edc50c40ULL, 0x4bbb6295f0756988ULL, 0x038cb288d6263676ULL, 0x0f0d139a0e81e943ULL},
    {0x9dbbca7b8e747cd6ULL, 0x79b39ebc7a1b1c54ULL, 0xf70fd2f2c0f93d1aULL, 0x1c0f8697795689cdULL},
    {0xfe536a16dc1d81e6ULL, 0x49be23a4b13598f9ULL, 0x6d2bc2e048bc979eULL, 0x2bd0f940ad936b79ULL},
    {0x7ce54d1e96ee62cbULL, 0xa06ebb275e096d16ULL, 0x4778c09a0053337fULL, 0x27eb1be27c9c4e93ULL},
    {0xf151be62548e2aeaULL, 0x284fbd307d1f71b0ULL, 0x8f96bdd3155a7ca3ULL, 0x2e4889d830a67e5aULL},
    {0x6064bbe6fcc1e305ULL, 0xc9891f2cadc165dbULL, 0x5d2ec5e9c5bd9983ULL, 0x193fe3db0ab47d3cULL},
    {0x37cb13027c83e525ULL, 0x6e9661c009679e4eULL, 0xce415907ad0c40edULL, 0x2bf3086e96c36c7bULL},
    {0x9ff2ea486e59bb28ULL, 0xd5e7e413f741ccf2ULL, 0xa98cdb697c6cad5dULL, 0x12f16e2de6d4ad46ULL},
    {0xad919b0343b92d2fULL, 0x33f3d5d6ec6c4bf0ULL, 0xa0262e3653ddd19fULL, 0x2a72147d230119f3ULL},
    {0x77df79acc10ba974ULL, 0x0a2d9bcc26412e29ULL, 0x6dc47f957806dc5fULL, 0x21be0e2c4bfd64e5ULL},
    {0x137fd4b6c21b444aULL, 0x71b84fb911aa57aeULL, 0x2749a3b54367b25aULL, 0x0e2d7e1dc946d70bULL},
    {0x9f3f07d4b92b3e2eULL, 0xc31adb0eae3325dcULL, 0x6170a745d8a4188cULL, 0x2667f7fb5a4fa124ULL},
    {0x830e107da78e3405ULL, 0x1550c12b08dfeb72ULL, 0x30a783b66064697aULL, 0x2ccc6f431fb74007ULL},
    {0x2ec50621e38e6e5dULL, 0xae6dbee9e8ca0c24ULL, 0x4f0201462420001fULL, 0x08888a94fc5a2ca3ULL},
    {0x6acfcd3ccbc53f2aULL, 0xa0d2fbe753af88b3ULL, 0xad40dd42c9b6fdd7ULL, 0x02977b34eeaa3cb6ULL},
    {0x10b5e9f971e16b9aULL, 0xbfcfe0d7e6ff8e96ULL, 0xfd6fb6c9ea13a648ULL, 0x120ccce13d28b75cULL},
    {0xa0bf2af32f86ff3cULL, 0x92787a4575b2bd73ULL, 0xc81e1b9770ea098cULL, 0x09fad2269c4a8e93ULL},
    {0xf630cffb60092d6fULL, 0x0debdb70775eeb8aULL, 0x0a4b310e4ac6f0faULL, 0x026091fd3d4c44d5ULL},
    {0xb904fd2bca893994ULL, 0x2543cc56afad6afcULL, 0xbb7fba9dfb6fc321ULL, 0x29404aa2ba565b77ULL},
    {0xe7201351b7c883f9ULL, 0xf1ffd86590e0827dULL, 0xd4e87c2548695b4eULL, 0x2749475c399aaf39ULL},
    {0xc7557dab65ffa222ULL, 0xa2ebe2dc2e4da70aULL, 0x39912b50424685cbULL, 0x098c842322479f72ULL},
    {0x0191d0c053b51936ULL, 0x758ace14c93c4da4ULL, 0x31238e57fead7d5cULL, 0x18cef581222b647eULL},
    {0x63b2aa681698de60ULL, 0x3cbc0ca4a108f98dULL, 0xd4e746745e43711dULL, 0x13177839c68a5080ULL},
    {0xa907d88e5f0deffdULL, 0x26cc4df712c0e5f0ULL, 0xc088f56f4b743256ULL, 0x020ca696f531e43eULL},
    {0x16e028387c7ac022ULL, 0x93d13708c646841dULL, 0xfa805a30fc548db6ULL, 0x27230eede9cccfc9ULL},
    {0x9057d2fe75bb281cULL, 0x6497c05969a01543ULL, 0xd64fde34a342a178ULL, 0x01645911c1198b01ULL},
    {0xfdca4a451a5d8643ULL, 0x198971e14487056cULL, 0x6e439c88341ce25fULL, 0x2c323fe16481bf49ULL},
    {0x5af88ae6db5085c8ULL, 0xb022c124d3bffe8bULL, 0x450bd2074c3e22e1ULL, 0x0fc082dfe70728e8ULL},
    {0xfe8a488b423521eeULL, 0xbe9642116ac4c77eULL, 0xd8cdca568dcc25b3ULL, 0x2052c174800db209ULL},
    {0x8dd9fd05b3ece9c0ULL, 0x0be351ce8129065aULL, 0xaf96d621d5542319ULL, 0x28e420e10df2fbb5ULL},
    {0x49d6e0bc3ae5069aULL, 0x55d6ae1bdacd1cb5ULL, 0x9f783c4462a24db6ULL, 0x25698ca5e24a1b79ULL},
    {0x34d9b857d6984d35ULL, 0xa297b61074422ac1ULL, 0xcf8ffbfa57d51049ULL, 0x160a9981a5c89a57ULL},
    {0x64642b069997f3d4ULL, 0x8b7cebf59ddbb0a0ULL, 0x34d9b694b843f3bfULL, 0x21c91a39e145c3bcULL},
    {0xd10975461e41734cULL, 0xd6eaa029d93f03b6ULL, 0xd2b09345ef112345ULL, 0x1ac8d80dcd5ee876ULL},
    {0xb8dbcea5657ce02cULL, 0x5d822895e2755544ULL, 0x7c1662a4174c5222ULL, 0x0ab3e6ad0ecf8b8eULL},
    {0xc5b2237cbdab3377ULL, 0xa52ef3ef5909b4e1ULL, 0x27e3b0b917b3a21cULL, 0x1c675182512620aeULL},
    {0x0c8a9092ac2bed45ULL, 0xe37a4a3e07a7d75dULL, 0x3d948d0c85bad2e2ULL, 0x2cdbc998dfd7affdULL},
    {0x3e491a133bb63b2eULL, 0x24337350309dff83ULL, 0x774bf67cc0dee333ULL, 0x23b584a56e2117b0ULL},
    {0x2f3d20de1465e9a5ULL, 0x0d133bc6ba4ec115ULL, 0x8cb73030a3c9d2a1ULL, 0x1e9e2b310f60ba9fULL},
    {0x60bcd4f1fa5b22dbULL, 0xc9ab5dab987520c4ULL, 0xabc3e720140ae746ULL, 0x0e01e365ba5b3031ULL},
    {0x1387d85bc1264e68ULL, 0x43382011b61c9a4bULL, 0x7b7127340498d5c4ULL, 0x040884cdcfc64bfcULL},
    {0xa0a17de311ef9668ULL, 0x353f1724d6067ed0ULL, 0x0c74a3998f2bea36ULL, 0x190b1ee1205eb950ULL},
    {0xfc28d1f832bd3b2cULL, 0xc1dfcf65ce61e165ULL, 0xd04f52fc23cd9c08ULL, 0x1647c72aec6c4388ULL},
    {0x842e595b71e4541dULL, 0x9f5494d89fb48b02ULL, 0x799880cc4c873626ULL, 0x2430006346a0145fULL},
    {0x3221850252b757afULL, 0x9d853902bb16bacbULL, 0x365107a3da3ae7f6ULL, 0x177b9a08343917e1ULL},
    {0x39b11d04666df4f8ULL, 0x09cd53d0ae294234ULL, 0x4e58862a68f5e326ULL, 0x04a420e642b11ae9ULL},
    {0xcdfabeddb6a25c8fULL, 0xde2461858e956cccULL, 0x105a88fab0afd810ULL, 0x25d0e0f739fb39fcULL},
    {0x2c4d4ffa0c740a27ULL, 0x320cb15610eaed45ULL, 0x85905cbf58651edcULL, 0x04476d91b7eff2fdULL},
    {0xe9780fd9ca286faeULL, 0x1c28f6d5e1250cb5ULL, 0x8bc9ca2419eb8deaULL, 0x1090c0b68b3d7d7bULL},
    {0xbf2899cb5c6617beULL, 0x376f2d435855c10eULL, 0x448a725c5c7cd5adULL, 0x25393ce3b9256d50ULL},
    {0x97d144f0fab46630ULL, 0xed824388d6b93426ULL, 0xfc862f306e6e5830ULL, 0x25931c0c7371f4f1ULL},
    {0x03f73f22afbf62f6ULL, 0x8a4d353185d58082ULL, 0xc82aad51b0fb79cfULL, 0x2396cb501700bbe6ULL},
    {0xb3f0ce03b8724884ULL, 0xa3dc9068c3cca7b5ULL, 0x54ea748a7129a7b0ULL, 0x26a363483348b589ULL},
    {0xa7a0e5b45fcd6897ULL, 0xc99b893334215f6bULL, 0x8d6f1535b92c5478ULL, 0x27ca107ca204f2a1ULL},
    {0x8d2d02b3b2d91056ULL, 0xac15f7301178581dULL, 0xe4662bde326b2cceULL, 0x26da28fc097ed77cULL},
    {0x72971ba56ee0cb89ULL, 0x655774c1bb35d575ULL, 0x703e3055070ac9ccULL, 0x056ab351691d8bb3ULL},
    {0x2d729af632376a90ULL, 0xc22547a11ffc5015ULL, 0xc76d109a2f481aa3ULL, 0x2638b57f23b754aeULL},
    {0xea7bc5519ede7cefULL, 0xc33e46a532bdec80ULL, 0x32f492c2605184fdULL, 0x304754bb8c57d607ULL},
    {0x752ac93a9b7619acULL, 0x48ec6857fc554010ULL, 0x514f155b5806cbf7ULL, 0x00d1727f8457ee03ULL},
    {0xc588e50947761fa3ULL, 0xb5bca86805ec9419ULL, 0x43ba295a303c72faULL, 0x00ee1f3c66fbc05cULL},
    {0x61f9297eb675d972ULL, 0x10a19fbcfc59078cULL, 0x4a76b5a1d82415fdULL, 0x0afafadcf5b4dd4aULL},
    {0xa8996d124dd04d0aULL, 0x65a234835a0a6a5eULL, 0x86ce45e8eed108eeULL, 0x0b2449f39746085eULL},
    {0x6a7ddf4823dd5dd6ULL, 0xf6c6f071ec3bdda7ULL, 0xc9f37b0045227095ULL, 0x206b0ce2f1b2c5b7ULL},
    {0x52c7e1029459409cULL, 0xcaffc3a4ef20fea8ULL, 0xb696e67433628cd6ULL, 0x0feba4fb87834c7cULL},
    {0x8173e972336e55d3ULL, 0x3b06f1315e6d70e1ULL, 0x8926752e084e0251ULL, 0x254dbfac74c49b0bULL},
    {0x37719edfa0ca8762ULL, 0x9606c5bd17910aebULL, 0x4655168c367559e1ULL, 0x0addb1372cee4e16ULL},
    {0x21a589d68831d759ULL, 0x6ca4d8d81b1ae162ULL, 0xc799024fb019f65cULL, 0x26b25b7e257f3e97ULL},
    {0x1960b1059e113ba3ULL, 0xa4657b9ab00bdb5bULL, 0x413b8d4c658787e5ULL, 0x090995b79acec240ULL},
    {0x2974178d44f73b7bULL, 0xeb0d8e40e99131f4ULL, 0xc57299687843cea3ULL, 0x08dbdc2e21ef11f2ULL},
    {0x58f170939785179fULL, 0x42fe9c491596ab67ULL, 0x679faf752a0f78e3ULL, 0x09e8aba671481197ULL},
    {0x7bc7c683f1363d5cULL, 0x7efd12a7f9eec94bULL, 0x659052a7ebaf816cULL, 0x1deb05180e833e45ULL},
    {0x35fd6523e5250879ULL, 0x248997e8b2c24af3ULL, 0xa926efbcc04aa9eeULL, 0x19a70ec6bdfc9098ULL},
    {0xeb93abe10bbf1f64ULL, 0x66353a3777d8a3f1ULL, 0x879986f9aab48905ULL, 0x21d773660adafb8aULL},
    {0xf6f46617841c3901ULL, 0x97a6b01fcd667347ULL, 0x3e20ba637b89d5d3ULL, 0x09f1890f72e9dc71ULL},
    {0x08c2145c33b111c3ULL, 0x48fa1f897bf219d6ULL, 0x2a300c61e446998dULL, 0x05af459361eb454dULL},
    {0xfa12fc850cc8b513ULL, 0x5f336f15f340756cULL, 0x664a66dc75a65733ULL, 0x0fa1a1d6829f0345ULL},
    {0x53655cf97a628bb0ULL, 0xf4280fcf87f636f8ULL, 0xbda0b1c0307ad543ULL, 0x02e47a35bcc0c3a0ULL},
    {0x36621895204d0f12ULL, 0x2034114601124910ULL, 0xb8f90e78bf4c24b7ULL, 0x14f773e9834c6bdeULL},
    {0xffb091962fc8f7ccULL, 0x642abe7cfd639992ULL, 0x255cf19d29bc7d8eULL, 0x102d98cf502ed843ULL},
    {0xcba686a7e91373c2ULL, 0x20d4c73ad3294738ULL, 0x4c47f6c65da7ca23ULL, 0x043dd5f4aa5a76ddULL},
    {0x4cfdb2b26bd11efaULL, 0x6f0e7c79743a306fULL, 0xa6c0d29a48d4f267ULL, 0x21833819c3337194ULL},
    {0xdc53262a3cff2b53ULL, 0xeb4eca246c311ecaULL, 0xb474a6819d116ca3ULL, 0x0f281925cf5ee649ULL},
    {0x93ce662f15c238d6ULL, 0xdf625dd60504d5dcULL, 0x44709c7746d6824eULL, 0x0d3e2477a7b10bebULL},
    {0xacbfc3eff5aefc44ULL, 0xd80f80ab51e73b49ULL, 0x56ff8a01be9cde35ULL, 0x2cd7f641bedbf669ULL},
    {0x86dd861310463cf8ULL, 0x9149d24045811d7aULL, 0x4d09380f98b74e38ULL, 0x29e95b492bf2f95fULL},
    {0xf8b3c50df83cc13eULL, 0x9ae4c51af6ffeb57ULL, 0x266efca86a6c810fULL, 0x22da66bc62e8f011ULL},
    {0x43072d841925554aULL, 0x220db79e8129df36ULL, 0x3023491794f4aca3ULL, 0x0fe6d30de7a82d16ULL},
    {0xc7e07ecb298fd67fULL, 0xd312d03fef1adfecULL, 0x123c46eff185c23aULL, 0x0050e842a1299909ULL},
    {0x885cbbdb63108c21ULL, 0x666f9ddf714ed7c5ULL, 0xbe34cc53a42d7733ULL, 0x2130a3a7b3221222ULL},
    {0xe1d328e67b33c9faULL, 0xaa66731f34a93280ULL, 0xd8d5883fe0566c24ULL, 0x2df9ee294edf99e3ULL},
    {0xa4b6fc5fc3372762ULL, 0x58132396dc250aebULL, 0xf26eb68cc21ff541ULL, 0x1bf7d6e489ad8c0cULL},
    {0x5d4778d311780e54ULL, 0xcf7b807728bf7fe3ULL, 0x61eaf739617ab136ULL, 0x0c602fa155be9587ULL},
    {0xb63faf0121ed7f21ULL, 0x5154080a24972faeULL, 0x32407d86b8d22d7dULL, 0x2e50e2c5b36aa205ULL},
    {0xb459123b180332e1ULL, 0xf674995ee8409b42ULL, 0x5710d6290ec4f782ULL, 0x17c2510982a7b582ULL},
    {0xb2ab255f376b42a8ULL, 0x21337b538eabd2f6ULL, 0x6803ecf2465b885bULL, 0x0b0d52f03c8af727ULL},
    {0x61972dd8fab8bd14ULL, 0xa9ac77c6c0f85d45ULL, 0x5953d88a63f80647ULL, 0x0f5633df1972b945ULL},
    {0x035498130a7f1572ULL, 0x24780ff43e76e929ULL, 0xe1422e9396811551ULL, 0x0ebf7ad29ca13804ULL},
    {0x661b1103a720ffe2ULL, 0xe18f94bee27c8a57ULL, 0x0b02962173bba343ULL, 0x1aff13c81bda47e8ULL},
    {0x5713be57efac6c07ULL, 0xd3f31de1a3b58ff3ULL, 0xda2465be85505862ULL, 0x210449dbf5cf3061ULL},
    {0xb93ad1c3ee629817ULL, 0x19d1e2f1d3001044ULL, 0x7d75cd6d3c7b9dbeULL, 0x088230c2794e50c5ULL},
    {0x17a4d6dbb20e7e3aULL, 0x8cce9a9e16c77056ULL, 0xda08dc464138dfc7ULL, 0x1c408c256490b0a1ULL},
    {0x90dd6f557e9e3903ULL, 0x8f7c77654d584404ULL, 0x22d1771200fb0765ULL, 0x074517e081eb4c1fULL},
    {0xa05adf61e12fdcbfULL, 0xcee5530559d6cf0fULL, 0x88524bdb203691b4ULL, 0x02d04e9c21df1dbdULL},
    {0xa81db32cf1b67b13ULL, 0xeb9b4650dae9f11aULL, 0x82e13ebd75de3b58ULL, 0x2eb7a011b8bce910ULL},
    {0xe6030c18f0cf17b5ULL, 0x4d2ac6bf95368304ULL, 0x299f75d6e8a849b5ULL, 0x2efda77ed35f4af0ULL},
    {0xc51b2440192ae064ULL, 0x61a73d10852b8114ULL, 0x2eddbeda65206d4fULL, 0x09199dcafd50ce64ULL},
    {0x76181cb4216e1562ULL, 0xcb655d8c1797e9faULL, 0x4dd319db666a75b5ULL, 0x268c5cfc446d399cULL},
    {0x012854eda11a18dcULL, 0x97b44e912cce6687ULL, 0x26b0e9a36c805786ULL, 0x2303a652c9490718ULL},
    {0x37073f4efb35fbdfULL, 0xbc5353eb110868d2ULL, 0xc3f041f31dc45922ULL, 0x27c53563b12a6ee2ULL},
    {0x2c278f22615d2b0eULL, 0x9969b5248cfe90f4ULL, 0xf02bd82d0a510904ULL, 0x1201a87eaf4ae618ULL},
    {0x6cb4b43dab2a443dULL, 0xcafcb1ba2c51e570ULL, 0xad8214997bb069beULL, 0x2c43169439fcd69eULL},
    {0x4fb9847e6304d944ULL, 0x4f46cbb36d702e3cULL, 0xea03c45d6984c689ULL, 0x0683597315359040ULL},
    {0x77795ad3a798d183ULL, 0xb0425e158314197bULL, 0xafb93b128febd16fULL, 0x03545706706eab36ULL},
    {0xedb393b71a0c0e6bULL, 0x740bed23a6a37870ULL, 0xd35f1fc051b31728ULL, 0x1a33c254ec117619ULL},
    {0xf338e517f1690c78ULL, 0x6e88f71e759b87e6ULL, 0x67b0c002281caf99ULL, 0x1ffe6968a4470cd5ULL},
    {0x107f4e02e355b393ULL, 0x140ddd5d2a5c4483ULL, 0xecb059c899fd80f4ULL, 0x0fd66e03ba8808ffULL},
    {0x7be3396b7fe013abULL, 0x6c8617a7bdd5d74aULL, 0x197394552906b17eULL, 0x263ab69f13b966f8ULL},
    {0x6eb7e03e39ba4046ULL, 0x3bd87d5aa3958fddULL, 0x5054d5a165de413eULL, 0x16a425e47d111062ULL},
    {0xfcc5f73af9138d9aULL, 0x53cc31d13e39e909ULL, 0xad752f03c673f0e2ULL, 0x2dc510a4719ec10cULL},
    {0xcb4aa709a94576e5ULL, 0x423c5179329b7a82ULL, 0x1bd1cad23d07dda3ULL, 0x24df8e8d856c5b5eULL},
    {0xbdf24a6cdce5620fULL, 0x7628249a01b09561ULL, 0x3cd5c68915a042e8ULL, 0x2bcc94ff4fc3c76fULL},
    {0xb48be86852da97dfULL, 0xd3295f52c38cffe6ULL, 0x8de54e343df7c429ULL, 0x076c1e88dc540c8dULL},
    {0xa990fb8e12cb46e1ULL, 0xe40ee1601120947dULL, 0x1c051fb12d9a5e4fULL, 0x09b5f209a451ac43ULL},
    {0x0683af75eb677c07ULL, 0x64e9424f55b0f1eaULL, 0xaa88d6a44135a6abULL, 0x205f17b0d8729e2eULL},
    {0x0cdd1edf9f237029ULL, 0x091681f0a4176172ULL, 0x912638c38be046cdULL, 0x281c5c688836f6cfULL},
    {0x4afa44f2592621f5ULL, 0x009a44e7a02ea50eULL, 0x5f4d67448c471cf3ULL, 0x1a053e6878e900f4ULL},
    {0x81742839d59e064cULL, 0x68efcb897e7bbee9ULL, 0x07fb7ceac84e4f54ULL, 0x100dc7d426debe30ULL},
    {0x0b1cb31b411e49c8ULL, 0xb28905bdb62c82c8ULL, 0xbb87e2cfadc8b75fULL, 0x17022672a016a957ULL},
    {0xe0c27203f954f4d2ULL, 0x9fb8b547182b170dULL, 0x71053a87ebe15123ULL, 0x1086db7e2760fc8bULL},
    {0xb85dd24fd7584064ULL, 0x2b41fb65a185536fULL, 0x02460ae4c2942facULL, 0x15384fe39d73b633ULL},
    {0x519e551357709008ULL, 0x47b1a853205fcfb5ULL, 0x4bf4abc5342c6c74ULL, 0x2ebb599fe9136d42ULL},
    {0xd996fac6f4d37288ULL, 0x4cf278292b4ce3eeULL, 0xfec3c0f0542e4c5aULL, 0x1b4b5e87cfb9262cULL},
    {0xb637febe659e5057ULL, 0xbb4a7581bb4fba60ULL, 0x801f3f82e302cafbULL, 0x2465053ae50b6885ULL},
    {0x6e0ab9d3d54859efULL, 0xda9f05e18b3708bfULL, 0x095c5bb5d38f1b97ULL, 0x114f32edcdea09cdULL},
    {0xee28d8c2543c7148ULL, 0x2e5e5519f3d18123ULL, 0x6b387cd77be779acULL, 0x2bc70dfeb2baab2fULL},
    {0x12e49bfe32c05415ULL, 0xa78348b9f6ec68a4ULL, 0x775e3a61ad7e77b6ULL, 0x01c9bf7a203ce22bULL},
    {0x9f4ad00ccb57ee9bULL, 0x55cfb575ff6a97cdULL, 0x7bedb0295fbbcec3ULL, 0x0514b0fe5909ea88ULL},
    {0x03e3202d7b6c1b7eULL, 0x2092520b12a201afULL, 0x1a132a8b058910a1ULL, 0x267c76ec81934cc8ULL},
    {0xfb151cf757bde5d6ULL, 0xf1622493ce83e95cULL, 0xc78c84babbb470adULL, 0x29170e3322b3d8d5ULL},
    {0x36dd596ca41d9519ULL, 0x5c6f09a45486cab5ULL, 0xaf33e5d3873f9c33ULL, 0x019f6a8124b19e33ULL},
    {0x5405d036242b60e9ULL, 0x009ed8ea171518aeULL, 0x8b348e9db1981c27ULL, 0x1904aa4d6908544aULL},
    {0x3b932a476455ff1aULL, 0xb3cee1de9dd6f647ULL, 0xf7f043956694e422ULL, 0x26f17873949bc679ULL},
    {0xbdcac9b18bc48f75ULL, 0x40c476031197131eULL, 0x193b33720b8aa540ULL, 0x1ac668f612b8243cULL},
    {0xa52f81568ef0663dULL, 0xccfbf8555be9796dULL, 0x196dae45bf624766ULL, 0x0996d961a75c0d07ULL},
    {0x5425b395c24fc819ULL, 0x74d171f99c63febbULL, 0xfd50d1b4383fbe66ULL, 0x030c97e1b8cad1d4ULL},
    {0xee226f2d8bd0848fULL, 0xb3e523f1fe502642ULL, 0x3953370255b68f89ULL, 0x06e3ad6a46900e2dULL},
    {0xa329890588cc916eULL, 0x65cb94b0e0455153ULL, 0x6b6880e42f9880f5ULL, 0x1d6b3755331cd021ULL},
    {0x3dd38c08bae531f2ULL, 0xc35189dc0b85ac03ULL, 0x59b041535e730ac8ULL, 0x28e4dcba4b96f12aULL},
    {0x7a3b3e4bc4a47a14ULL, 0xb0712a476260376cULL, 0x8ccf484f2974b6a6ULL, 0x08b6086046a83550ULL},
    {0x89643e15b9bb3b52ULL, 0xb6fd85fba6a0536aULL, 0x444bcec97812019bULL, 0x162cd2ca7fe3b5f1ULL},
    {0x998c01c64d483a76ULL, 0xb5c9a9c1192063d1ULL, 0x05af5b11937e4f5cULL, 0x28f1e03baaea9bbcULL},
    {0x6031a0bb6791ce10ULL, 0x0127d2aab4aa7136ULL, 0xa395af2734c25faaULL, 0x1bdb062778d7c15dULL},
    {0x50329ebdd24749cbULL, 0x0fc98870b2324a8bULL, 0xcb2914e829627e0eULL, 0x2375839502e09890ULL},
    {0xe92d33611ed7bb50ULL, 0x332dc87cfb2df456ULL, 0xad7c55668dc9423aULL, 0x1fa8662fbcb61fb3ULL},
    {0x3f7f9736079d7694ULL, 0x46e2fb2c47a5138fULL, 0xf8707f721716c8a4ULL, 0x1e4fad2dd6b0a6f1ULL},
    {0x61b0f5f13731ffe7ULL, 0xba3bd050059f53d2ULL, 0x6df6f5fcdd1fa788ULL, 0x211256d16c7269fdULL},
    {0xf4a1079b12bcc5a5ULL, 0xf42060e574dda341ULL, 0x4f8e2a2e6af08318ULL, 0x2e49084b336eceaaULL},
    {0x758d25891fb00bb9ULL, 0x1aecea08dfe14cabULL, 0x3bf35192ac680821ULL, 0x0ce19f54cdc39f7fULL},
    {0x84a8468bab2c14cbULL, 0x8dc60451e4ae4e1cULL, 0x3cc394221261d874ULL, 0x0011c5d56c390e89ULL},
    {0x14a8cd8051579b4cULL, 0xca60e17bfa39b475ULL, 0x8a9e05ee6af3dbb7ULL, 0x17d79ff06b63ac2aULL},
    {0xcab00173639015faULL, 0xb1a8b35cd6416a2eULL, 0xdc74560093592b06ULL, 0x19a7d3a446cb5393ULL},
    {0xaa6c3c97237037a6ULL, 0x31f04596d8928da7ULL, 0x2a808b2e1b9282f3ULL, 0x030c00a0933dcdbaULL},
    {0x9370be8aab64139cULL, 0x935d2d00184c4accULL, 0xae25ad080695382eULL, 0x16bcb447ce2d50f3ULL},
    {0x39255b7cd66feb1dULL, 0xe62124f37cab7b6dULL, 0x5ea4ec8715312997ULL, 0x12341b46b0150aa2ULL},
    {0xdc89212db6a49ff4ULL, 0x002fc28e296d1044ULL, 0xb72a97b2bf610c84ULL, 0x0e86d13917f44050ULL},
    {0xd059025b110c7262ULL, 0x1052a181f8f2eb14ULL, 0xd357e00b53d7f30dULL, 0x08e6eb4089d37d66ULL},
    {0xe10c48ce97ca7b18ULL, 0x0415ccb351a1e0ceULL, 0x4738d15dd1481a0cULL, 0x2ea123856245f6c8ULL},
    {0x664db0f9c84dfa6fULL, 0x4195789025413abfULL, 0x3446e00330b16310ULL, 0x2dca72b2ebcab8c2ULL},
    {0xc64a26cbd42b6a6bULL, 0xf2f6b4235f036fa4ULL, 0x63329f585ec924b3ULL, 0x06ff9ed50d327e84ULL},
    {0xc630a4535afbf730ULL, 0xe2a60e0cca84ea2aULL, 0x47f7c9bda3d54df8ULL, 0x246a10b7e3e00899ULL},
    {0x5c96b39d688b6691ULL, 0x2f846a715ae67ad7ULL, 0x18719ed99d700ee5ULL, 0x22a63501c5f04b90ULL},
    {0x40ec07e514fae937ULL, 0xb9164f58351d8aa1ULL, 0x71799ac5d2e224cdULL, 0x2f4c50477f7fd9c6ULL},
    {0x0cda32cad851567eULL, 0x38f0ba8a4a23d4b5ULL, 0x13b17f4d876d9a1eULL, 0x10ffb7aad1f51c7dULL},
    {0x1a056935c35803aeULL, 0x784027352187e7afULL, 0xa4d39722532d5420ULL, 0x0e9cefddc3c2d3beULL},
    {0xa3e83bdd4ba62b41ULL, 0xa1656f96a33c8978ULL, 0xc23352e6dc6ea4afULL, 0x07af84a4d3141e7aULL},
    {0xe940f3ec8a22c3c5ULL, 0x1a39323d6e89b638ULL, 0xf8de00d14b1e566dULL, 0x2d9e31a10aebc761ULL},
    {0x7656747be27e64c7ULL, 0xd36034b314dad844ULL, 0x33db1afd592f66f1ULL, 0x27f19a6532e66b53ULL},
    {0x7e4d617d47d07ffdULL, 0x180ed99f8f3155cdULL, 0x54b2024c3b4a577aULL, 0x0058fa3c8454d633ULL},
    {0x708964956816a5d5ULL, 0xb0414a205d3a175dULL, 0x67957c080699343eULL, 0x041627b6715b7809ULL},
    {0x89888f12b727c52dULL, 0xd98201471cf1f665ULL, 0x7f632e57b958ccecULL, 0x006ac49dd9253edcULL},
    {0xec46a6bf18301398ULL, 0xec0c9c0d6d25a9a4ULL, 0xb1d8c3616bbe3386ULL, 0x0131adffd8bd7254ULL},
    {0xcf030e1cd8f9f5b6ULL, 0x77977ad7e25e49a3ULL, 0x4138e413ef62a283ULL, 0x1c4a6f52c9fccf7aULL},
    {0xd1f7958d2c2645f6ULL, 0xfee048ae2078aeb7ULL, 0x946551b3860ea479ULL, 0x03f2a6be51ec677fULL},
    {0x4d7376396b8ddc62ULL, 0x8a1372d854311956ULL, 0x391a0cb78ef3a964ULL, 0x2da770aad2c2eb09ULL},
    {0x38062afb75d64a03ULL, 0xc9d45fe866c359c7ULL, 0xdc1802febfab02ceULL, 0x15278463665f74cdULL},
    {0x8d580638ac54c773ULL, 0x34e38ea966a08a6fULL, 0xc9731027090518d4ULL, 0x12fe278aa36544eaULL},
    {0x21b06ff30b6a23b6ULL, 0xd8587604ca4f0d6eULL, 0x4c45d119d3f4cc7fULL, 0x149b9c802182558aULL},
    {0x0adc4959b691dfe4ULL, 0x55e044fd60dbac9aULL, 0x17d19319772f3c98ULL, 0x0812e7b4d847bc85ULL},
    {0x2a66973703a0c61bULL, 0x555813c7e7503aeaULL, 0xd8df7f28a0bfaa7fULL, 0x02ed8d8ddeafe3d9ULL},
    {0xa1304038662d4db8ULL, 0x55e5e4d9a03d6b6bULL, 0x4deb6029f921029eULL, 0x0ebd073ba0537b51ULL},
    {0x44ee75b62eff9f59ULL, 0x55b3e792c6afa08bULL, 0x05c6ba8d2ccd0282ULL, 0x15c754d5b14b2c42ULL},
    {0xc29e7cbc30e8732aULL, 0x1cc1235270f4cbc5ULL, 0xb0ed8fa6fa311b39ULL, 0x169515c89ac5479dULL},
    {0x6d9161f5cd9a4fefULL, 0x08bdc29f6ff03769ULL, 0x2388f26210011016ULL, 0x25479fbfb3a68f98ULL},
    {0xce09486e94be6071ULL, 0xa7f8e6e972182196ULL, 0x3c852cb0311a578cULL, 0x14475c4bd520451fULL},
    {0x5c4e73363d097799ULL, 0xd3a847502aec8d5fULL, 0xc9baf2798833a1dfULL, 0x045a691066cc66beULL},
    {0x013b8bcb37eba683ULL, 0x147a8ca037221b90ULL, 0xb833ac8a11e3a3f0ULL, 0x26029c0c267c799fULL},
    {0xb8101d5b948d1641ULL, 0x73ce12a6a94a3e45ULL, 0xf7c946969c1c2608ULL, 0x163facb34ff572fbULL},
    {0xaf8ee00c4240ee28ULL, 0x13e06a6275e58688ULL, 0x1d969320cc69d5ecULL, 0x2c714e96e1913b35ULL},
    {0xd52b804eff1d5fa6ULL, 0xddd6268f06debfe2ULL, 0x5aba84665ecd2bf9ULL, 0x1c1661e2a7ce74b7ULL},
    {0xa8c3c068b7dc2c71ULL, 0x6635b34c2a0889feULL, 0x5e5af3e6619a47d2ULL, 0x06a69ae795ee9bfeULL},
    {0x31416c85d731d46aULL, 0x74dbdbadf54195c7ULL, 0xc5d28b4c19a36093ULL, 0x113d58535d892115ULL},
    {0x2ca1a74063b46101ULL, 0xe534f1ff47f7917aULL, 0x38ff97d761da6042ULL, 0x2ab89102e2b8d5e6ULL},
    {0x39804fd6a15ad1b3ULL, 0x349031893da2b4fdULL, 0x962730c45e699546ULL, 0x03c11ca79e41fdfeULL},
    {0x6adf040faaf2669cULL, 0xf7f67b4d4cfe846cULL, 0x88014ddbbbfc9da1ULL, 0x27096c6726214038ULL},
    {0xaa9dc2b57ef5be0dULL, 0x66db790ce486130cULL, 0xd504d4deeb53b13cULL, 0x2de32ad15497aef4ULL},
    {0x255754448eefd001ULL, 0x28c738dddaec9f3dULL, 0xfd5d341310722a2dULL, 0x0dc108f2b0a280d2ULL},
    {0x7d34ca50365d832fULL, 0xbcdc3eebc409be7cULL, 0xc96858a1bb9efad5ULL, 0x1869f3b763fe8164ULL},
    {0x8c6d33767129682dULL, 0xb616945e16a568d4ULL, 0xf82559fe6a911843ULL, 0x022ed3a2d9ff31cbULL},
    {0x10c6aec077d026bcULL, 0x92fca1f27c19c266ULL, 0x3944ed1365bd0e72ULL, 0x2155d6005210169eULL},
    {0x3ea5928c8caeae85ULL, 0xec0c0556c91af3dbULL, 0xcae93263f5f1b4bbULL, 0x0de1ba7a562a8f7aULL},
    {0x6351dfa7da902563ULL, 0x126f740bce8d637bULL, 0xcfce5bf46ec7da38ULL, 0x05dbb4406024beabULL},
    {0xc97e5427a368fd5eULL, 0x00e789e3fcd72dccULL, 0xd4d8dc8ad778d32cULL, 0x05d4149baac413beULL},
    {0x9212e22172c27b2eULL, 0xf0b6802fa941c787ULL, 0x9be5046e7397e76fULL, 0x01cdf8b452d97c2bULL},
    {0x1b0a22279d46c07cULL, 0xc4d7c5015eced8c7ULL, 0xaf8085ff81adce33ULL, 0x1fc6a71867027f56ULL},
    {0x568e0fda96aaafc2ULL, 0xa9e185b75306d9c3ULL, 0x5d4d59a5a7a3a42bULL, 0x1040bef4c642d034ULL},
    {0xa8081475ab8fad0dULL, 0x2b21e95676431918ULL, 0xff2c91b289334a4dULL, 0x16b79c3a6bf316e0ULL},
    {0x3cbe1cdcd59f474eULL, 0xa34070e52b601fc1ULL, 0x434b3a1387e3c8c6ULL, 0x20dff1bc30f6db6bULL},
    {0xdfb7fd8512ae060dULL, 0x062dd4171a726a8bULL, 0xc254955030a970f8ULL, 0x0212ac2ab7a6eaaeULL},
    {0x13c8119f6996ae09ULL, 0xb02dc03134f00442ULL, 0x869a109c9215637cULL, 0x2f29377491474442ULL},
    {0x5837d9f32d814bfaULL, 0x73be9f3866aa284cULL, 0x25ec93c33fea6032ULL, 0x0984ca6a5f9185d5ULL},
    {0xeb0ee9294b24f028ULL, 0xe491361c8a6bd19cULL, 0x0d299bd6fa81220dULL, 0x0d080a6b6b3b6070ULL},
    {0xce929ed7c85a4544ULL, 0x21acc85b6400264dULL, 0x6789530638cb0ad8ULL, 0x0e65cd99e84b052fULL},
    {0x55975da12736920bULL, 0xe30e3d20380ff6a6ULL, 0x4808f72c716cd05eULL, 0x2e208875bc7ac122ULL},
    {0x4a60d1aa8592bad5ULL, 0xae2e3b894afd29f6ULL, 0x76a0b0ff3d7dfac1ULL, 0x2989f3ae477c2fd3ULL},
    {0x3a74c3cea7189459ULL, 0x918106a463290a3eULL, 0x9222d101e6fac0ceULL, 0x11361ce544e94137ULL},
    {0x34c8bd05a2061438ULL, 0xd122a822b8fb366cULL, 0xa539e10c173f6a75ULL, 0x1e8d014b86cb5a7dULL},
    {0x212ee2c28ee98733ULL, 0xa0c2324167ef6c91ULL, 0x7ba812ad29558e23ULL, 0x173f65adec8deee2ULL},
    {0x991bd695310eddd9ULL, 0x5da5df7ad45499d0ULL, 0xafee8bd0c779ac3eULL, 0x01c36daaf9f01f1bULL},
    {0x4a6f5741f381e562ULL, 0xf277d1a3f2fc8994ULL, 0xaa9ab1c485bb85ffULL, 0x1353acb08c05adb4ULL},
    {0x20f1c87a3b064d34ULL, 0x009d33deb4f93aebULL, 0x1860e71ea1188ee4ULL, 0x2e5abd2537207cadULL},
    {0x421726ba8f69455cULL, 0x13deb4eb34913a13ULL, 0xd02eedbb7ab85625ULL, 0x191d5c5edaef42d3ULL},
    {0xee7939dd2dcd089eULL, 0x82a04c74c127de9dULL, 0x82a263fea6d7599dULL, 0x11d7f8d1f2692642ULL},
    {0x1bad085286cac971ULL, 0x3445cb4cd6bc6f95ULL, 0x90f79ad5e6799797ULL, 0x04218fde366829edULL},
    {0x27b71c730d76d6ddULL, 0x027b73b489301c32ULL, 0x048397ca5f47a202ULL, 0x0070772f7cf52453ULL},
    {0xc1dc04dbe3d2b861ULL, 0x67681a98cd051634ULL, 0xc865b065687a1d9bULL, 0x038a389baef5d9a7ULL},
    {0xf19860789015a6e5ULL, 0x0f39d00966a50beaULL, 0xcda446b2b4b59ccdULL, 0x09a5eefab8b36a80ULL},
    {0x9d16212c7584cd8cULL, 0x3d9ec99edfacb748ULL, 0xb969c145109b4b58ULL, 0x01b588848b8b47c8ULL},
    {0xfed91e30d42954a6ULL, 0x545e5abfa323d817ULL, 0x6e1af6dfc3341419ULL, 0x0b846e4a390e560fULL},
    {0x85cabfe85ce72fe3ULL, 0xeb1513bc394fc4f9ULL, 0x0d43a02ddb900040ULL, 0x23a6679c7d9adb66ULL},
    {0xf72f31d6fe089254ULL, 0x4c3402fb7c85ecccULL, 0x3e5caa35f1351e9fULL, 0x2e0374a699197e34ULL},
    {0x37d41913a7a27b48ULL, 0x4b8cc0b1176bb9ecULL, 0x7f7a08af4cde3ff6ULL, 0x0752cd899e52dc4dULL},
    {0x99e2873dd7ae55a7ULL, 0x0275142b664b802cULL, 0xc349a2b6d57397a5ULL, 0x068f8813127299daULL},
    {0xb374330f2da202b5ULL, 0x86872d04a295b5b8ULL, 0x677574167434b3f9ULL, 0x2ba70a102355d549ULL},
    {0xb8609e70a0b50828ULL, 0x09f9099b825dd289ULL, 0xa334d1df03b55213ULL, 0x2c467af88748abf6ULL},
    {0x96d29e5763e8f497ULL, 0xe3a52c2d1a319572ULL, 0x01009a2b448ae881ULL, 0x05c5f20bef1bd827ULL},
    {0x3ac8c9fe61b73871ULL, 0x0cd083a2c649d9f2ULL, 0x842a381f6006e2c6ULL, 0x0dc6385fdc567be5ULL},
    {0xd255baa8114b369cULL, 0x0378d5b84150d25eULL, 0x19d49911b8670fa7ULL, 0x142d3983f3dc7f7eULL},
    {0x00fa18c1b2df67bfULL, 0xf36f86a7a99aa35cULL, 0xfd7e6d98c96a0fa0ULL, 0x29a01efb2f6aa894ULL},
    {0xd2a1af04eb613a76ULL, 0x0ab9e8afc64555b7ULL, 0x38c4a5066644ec63ULL, 0x0525ffee737d6051ULL},
    {0xf177cf4238301dc8ULL, 0x7e164f614910264eULL, 0xf076677ca0e82276ULL, 0x1e807dca81d79581ULL},
    {0xdba56082dbd8757cULL, 0x4c0223e0f733a52fULL, 0x93510816472474d3ULL, 0x0385fb3f89c74dc9ULL},
    {0xf558f337bab0ea01ULL, 0xcfabd7016fd6ef1aULL, 0xe1a6298e53cae59fULL, 0x037640dc1afc0143ULL},
    {0xb7e4c0de896074b4ULL, 0x5fd56cf031da8050ULL, 0xf12a6c5260829eeeULL, 0x1341999a1ed86919ULL},
    {0x7b244f65bed8ece7ULL, 0x73afd642efdcc565ULL, 0x56906d4bafb10ad7ULL, 0x069eb075866b0af3ULL},
    {0xea1909a619033696ULL, 0xd2726101d3afaa02ULL, 0x95b38e8e08b3e646ULL, 0x171c0b81e62136e3ULL},
    {0x5575107502acced8ULL, 0xcbbdcb39bfe696f9ULL, 0xb6eb55c311753e84ULL, 0x2c81814c9453f51cULL},
    {0xe39b8a86a7c3a604ULL, 0xb04b39032adca92cULL, 0xe3b33fadcf274b2aULL, 0x29d843c0415d35d9ULL},
    {0xa7669cf3fae7728bULL, 0xd8e15ea5947f2cdaULL, 0x8436bccdabb78750ULL, 0x085d6a1070f3513dULL},
    {0x9e2a5cda412fc394ULL, 0xdbf1dd4e6706b02cULL, 0x10a44ba665bf302cULL, 0x11820363ed541daaULL},
    {0x105840b751a16317ULL, 0xdfd3150e05f1df5dULL, 0x02b60d61a83785bdULL, 0x201935a58f5c57fcULL},
    {0xcfed610e87c02e9aULL, 0x46794eedd686cd8eULL, 0xe27a952abd33a03dULL, 0x0a8c2820c56971aaULL},
    {0xd50dbc163a281877ULL, 0x650b65ff33e6be1fULL, 0x04abd6d0bd7500b6ULL, 0x180638ff301a64caULL},
    {0x3e9b321a812dd36bULL, 0xf85ca8a937cfbec6ULL, 0x044f97114a4158a3ULL, 0x095c716266f1de59ULL},
    {0x8d4087a497d73490ULL, 0x83b618c5c1a68781ULL, 0x20d86ffed6c7ca15ULL, 0x17c31ea02fbc3783ULL},
    {0xe4d50a77f192a91bULL, 0x3c17a9764ccd660dULL, 0x6a7227e4192d149dULL, 0x05b86c4bb8ef318bULL},
    {0xd6ce74ba986c7a7bULL, 0xab15f4a6ae0d237cULL, 0x6ff70d7ea2fde2c7ULL, 0x265bc95df4a4c487ULL},
    {0xd6c886d4715c7929ULL, 0x08701739c5f5b4b3ULL, 0xd9bbe48f5fef2f69ULL, 0x24752b47bc6c6bc8ULL},
    {0xe583b9324d974efeULL, 0x78d624b98da96ee5ULL, 0xa0d86e527a964821ULL, 0x14814a1e0f492a4eULL},
    {0xc7523bca906f00bdULL, 0x997c8e041d3cfb3dULL, 0xbd60577378f29381ULL, 0x10def931073b6479ULL},
    {0x1b4592c98610175fULL, 0xfa0b880d28c69d03ULL, 0x7f706c0d8ab4ed03ULL, 0x14f7ae770bf7e95fULL},
    {0x75c5cc9dce1ce589ULL, 0x9decc9d428ebe4e7ULL, 0x9f926af40e8035d1ULL, 0x1aef50a0cee751b5ULL},
    {0x951214b57e73cf5aULL, 0x086c2a2d57d09602ULL, 0xba65ca60068dfe3bULL, 0x041935607172f68eULL},
    {0x37a151d3bf452cb8ULL, 0x0493fbefe83c8198ULL, 0x573bd083959b856cULL, 0x26863e9dd24255d1ULL},
    {0x652738e63ff8b3afULL, 0xf5adf251ba62052cULL, 0xeb3d7a068bd087c9ULL, 0x2036efb6f9830965ULL},
    {0xb00fa4f1b4f4ee9bULL, 0x30be4f75a753f854ULL, 0x766b639a029969caULL, 0x0c712a975b74dc9dULL},
    {0x375731d387539699ULL, 0x7afdff6456492ca3ULL, 0x27afc99bfac1e680ULL, 0x08014dab3cd1667eULL},
    {0xb53009f79b34e6a4ULL, 0x97c4dd4d37b4e8f3ULL, 0xa82a4a79839d6a2bULL, 0x198d07192db4fac2ULL},
    {0xfd15784d1f63e572ULL, 0x2709b29d53bb946dULL, 0xb23b4131426897a3ULL, 0x29eb1de42a3ad381ULL},
};
inline constexpr uint64_t kMds5[25][4] = {
    {0x4fc6fdbcf38d7da1ULL, 0x9f22e57ace3cd7f6ULL, 0x080b0af133b9e436ULL, 0x251e7fdf99591080ULL},
    {0x48550486e91c7765ULL, 0xfe26ea9ca238d6e3ULL, 0x47cbd3b1c17d97c7ULL, 0x25fb50b65acf4fb0ULL},
    {0x6ea1e31ed5767833ULL, 0x6deb5325f367a455ULL, 0x355f39ebf62f91b0ULL, 0x293d617d7da72102ULL},
    {0x6145f14ba6d3c1c4ULL, 0x66599e575a9b7edfULL, 0x960111ac25da4743ULL, 0x104d0295ab00c85eULL},
    {0x3ed5b90f2f69c977ULL, 0x792b3813954fe9bfULL, 0x7dea3e336cd96a39ULL, 0x0aaa35e2c84baf11ULL},
    {0x69f661b2eb74c839ULL, 0x052903dc6609ea69ULL, 0xc03e17c1d1dcdb02ULL, 0x2a70b9f1d4bbccdbULL},
    {0x115b8e2e991ccd7aULL, 0xba9f92ad8ef4b979ULL, 0x6315a9934f1b8a1bULL, 0x281154651c921e74ULL},
    {0xb86a894f7db36c37ULL, 0x8ccd8fdb9ee2b45fULL, 0x0b53c732134efa33ULL, 0x28c2be2f8264f95fULL},
    {0xc4ec8fa75e530a13ULL, 0x9b626d8cb4dc18dcULL, 0x6d427c890b1883bbULL, 0x21888041e6febd54ULL},
    {0x350d65e2cbff4941ULL, 0xe810930e3ea4574aULL, 0x80195b9592d8cf2bULL, 0x14ddb5fada0171dbULL},
    {0xa4fa8478970d401dULL, 0x55b91bff652ad69aULL, 0xdea43265306a37edULL, 0x2f69a7198e1fbcc7ULL},
    {0x6d6a3747594d3052ULL, 0x67ba312b34140e71ULL, 0xad931ab80e37bbb2ULL, 0x001c1edd62645b73ULL},
    {0xa7f9a4b228bfc32bULL, 0x39c40c603049466fULL, 0xce2f2c96c69663c4ULL, 0x15b98ce93e47bc64ULL},
    {0x65051de33163cf9cULL, 0xcba8458b28e44d92ULL, 0x58f65be2fbac809fULL, 0x12c7e2adfa524e59ULL},
    {0x531ec2de53bbd167ULL, 0xaf67ce79816ef468ULL, 0x49018222e7b8922eULL, 0x2efc2b90d6881348ULL},
    {0xf1afd6c5f721f830ULL, 0x3c3ffa4550bd2514ULL, 0x1981e55e3e1a29a1ULL, 0x0c3f050a6bf5af15ULL},
    {0xeda7784320a1a36eULL, 0x8b2efe2ecd424a73ULL, 0xfa75ba7992bd34f0ULL, 0x0dec54e6dbf75205ULL},
    {0x7cc75cf32d8136faULL, 0x98364a11f4d988fbULL, 0x20225815034b1960ULL, 0x1c482a25a729f5dfULL},
    {0xb8b607ae9fd8514aULL, 0x0812ac2fc9a14a5fULL, 0x52732624e4ab9436ULL, 0x2625ce48a7b39a42ULL},
    {0x9fb9f28af710251fULL, 0xed7ef8e300b9a8bbULL, 0x86f7cd4fd710c509ULL, 0x07f017a7ebd56dd0ULL},
    {0xe2f78c2ccc2e3595ULL, 0x7c5e55c20146259bULL, 0xf97c9d6186c6c3eaULL, 0x2a20e3a4a0e57d92ULL},
    {0x403b01feb727a549ULL, 0x701673aed820d9c4ULL, 0xaafb1e9a5d63c0eeULL, 0x1049f8210566b51fULL},
    {0x61b9299b82d69c8eULL, 0xef357a69e3e86b55ULL, 0x68002bd9d1b96b4bULL, 0x02ecac687ef5b4b5ULL},
    {0xd4ebcf11bbe1e37bULL, 0xbdcb6b58ba40441eULL, 0x6808f88c9ba903d3ULL, 0x2d3a1aea2e6d4446ULL},
    {0xc98d803bfed65e64ULL, 0xb39c4a7a72dbb6d9ULL, 0xc9ad171e4f35fe49ULL, 0x14074bb14c982c81ULL},
};

}  // namespace sans::poseidon_constants

#endif  // SANS_POSEIDON_CONSTANTS_HPP_
