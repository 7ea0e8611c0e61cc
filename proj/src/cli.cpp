#include <forge/cli.hpp>

#include <forge/builtins.hpp>
#include <forge/circuit.hpp>
#include <forge/cnf.hpp>
#include <forge/compiler.hpp>
#include <forge/dtiwi.hpp>
#include <forge/encoders.hpp>
#include <forge/error.hpp>
#include <forge/selftest.hpp>
#include <forge/solver.hpp>
#include <forge/tradeoff.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace forge
{

namespace
{

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string read_file( const fs::path& p )
{
  std::ifstream f( p, std::ios::binary );
  if ( !f )
    throw error( "FileNotFound", p.string() );
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

std::string trim( std::string s )
{
  const auto b = s.find_first_not_of( " \t\r\n" );
  const auto e = s.find_last_not_of( " \t\r\n" );
  return b == std::string::npos ? std::string{} : s.substr( b, e - b + 1 );
}

machine load_machine( const std::string& spec )
{
  if ( fs::is_regular_file( spec ) )
    return parse_machine( read_file( spec ) );
  return builtin( spec );
}

/// Inline string, or the contents of a file of that name.
pstring load_pstring( const std::string& arg )
{
  if ( fs::is_regular_file( arg ) )
    return pstring::parse( trim( read_file( arg ) ) );
  return pstring::parse( arg );
}

circuit load_circuit( const std::string& path )
{
  const auto data = read_file( path );
  // text files start with `inputs:` after any comment lines
  std::istringstream in( data );
  for ( std::string line; std::getline( in, line ); )
  {
    line = trim( line );
    if ( line.empty() || line.starts_with( '#' ) )
      continue;
    if ( line.starts_with( "inputs:" ) )
      return parse_circuit_text( data );
    break;
  }
  std::vector<std::uint8_t> bytes( data.begin(), data.end() );
  return deserialize( bytes );
}

void write_file( const fs::path& p, const std::string& data )
{
  std::ofstream f( p, std::ios::binary );
  if ( !f )
    throw error( "FileNotWritable", p.string() );
  f << data;
}

json stats_json( const circuit_stats& s )
{
  return { { "gates", s.gates }, { "inputs", s.inputs }, { "depth", s.depth } };
}

std::string number_text( const rational& exact, double approx, precision mode )
{
  if ( mode == precision::exact )
    return decimal( exact );
  char buf[64];
  std::snprintf( buf, sizeof buf, "%.12g", approx );
  return buf;
}

std::string vertex_list( const std::vector<std::size_t>& ids )
{
  std::string s;
  for ( auto id : ids )
    s += ( s.empty() ? "" : " " ) + std::to_string( id + 1 );
  return s;
}

struct context
{
  std::ostream& out;
  bool as_json = false;
  unsigned jobs = 1;
  std::uint64_t seed = 1;

  void emit( const json& doc, const std::string& text ) const
  {
    if ( as_json )
      out << doc.dump( 2 ) << '\n';
    else
      out << text;
  }
};

int cmd_tm_run( const context& ctx, const std::string& machine_arg, const std::string& input, std::uint64_t bound,
                bool trace )
{
  const auto tm = load_machine( machine_arg );
  const auto x = load_pstring( input );
  std::ostringstream text;
  json doc;
  if ( trace )
  {
    const auto t = run_trace( tm, x, bound );
    json rows = json::array();
    for ( const auto& row : t.rows )
    {
      std::string tape;
      for ( auto s : row.tape )
        tape += tm.alphabet()[s];
      rows.push_back( { { "state", tm.state_names()[row.state] }, { "head", row.head }, { "tape", tape } } );
      text << tm.state_names()[row.state] << ' ' << row.head << ' ' << tape << '\n';
    }
    doc["trace"] = rows;
  }
  const auto r = run( tm, x, bound );
  doc["verdict"] = to_string( r.outcome );
  doc["steps"] = r.steps;
  text << to_string( r.outcome ) << " after " << r.steps << " steps\n";
  ctx.emit( doc, text.str() );
  return 0;
}

int cmd_compile( const context& ctx, const std::string& machine_arg, const std::string& input, std::size_t expose,
                 std::uint64_t bound, const std::string& output, bool raw, bool as_text )
{
  const auto tm = load_machine( machine_arg );
  const auto c = compile_on_pstring( tm, load_pstring( input ), expose, bound, { .fold = !raw } );
  const auto s = stats( c );
  json doc{ { "stats", stats_json( s ) } };
  std::ostringstream text;
  text << "gates " << s.gates << " inputs " << s.inputs << " depth " << s.depth << '\n';
  if ( output.empty() )
    text << to_text( c );
  else
  {
    if ( as_text )
      write_file( output, to_text( c ) );
    else
    {
      const auto bytes = serialize( c );
      write_file( output, std::string( bytes.begin(), bytes.end() ) );
    }
    doc["output"] = output;
    text << "wrote " << output << '\n';
  }
  ctx.emit( doc, text.str() );
  return 0;
}

int cmd_solve( const context& ctx, const std::string& path, bool lenient )
{
  const auto c = load_circuit( path );
  const auto r = solve( c, lenient ? solve_mode::lenient : solve_mode::strict, ctx.jobs );
  json doc{ { "verdict", r.sat ? "SAT" : "UNSAT" },
            { "witness", r.sat ? json( r.witness.str() ) : json( nullptr ) },
            { "evaluations", r.evaluations },
            { "gates", c.num_gates() },
            { "inputs", c.num_inputs() } };
  ctx.emit( doc, r.sat ? "SAT " + r.witness.str() + "\n" : "UNSAT\n" );
  return r.sat ? exit_code::sat : exit_code::unsat;
}

int cmd_decide( const context& ctx, const std::string& manifest, const std::string& input, const std::string& via,
                bool strict )
{
  const auto inst = load_manifest( manifest );
  const auto x = load_pstring( input );
  bool member = false;
  json doc{ { "instance", inst.name }, { "via", via } };
  std::ostringstream text;
  if ( via == "bruteforce" )
  {
    bruteforce_report r;
    member = decide_bruteforce( inst, x, &r );
    doc["in_universe"] = r.in_universe;
    doc["fillings"] = r.fillings;
    doc["timeouts"] = r.timeouts;
    doc["witness"] = r.witness ? json( r.witness->str() ) : json( nullptr );
    text << ( member ? "member" : "non-member" ) << '\n';
    text << "fillings " << r.fillings << " timeouts " << r.timeouts << '\n';
    if ( r.witness )
      text << "witness " << r.witness->str() << '\n';
  }
  else
  {
    circuit_report r;
    member = decide_via_circuits( inst, x, { std::nullopt, strict ? solve_mode::strict : solve_mode::lenient, ctx.jobs },
                                  &r );
    doc["in_universe"] = r.in_universe;
    json fam = json::array();
    text << ( member ? "member" : "non-member" ) << '\n';
    for ( const auto& m : r.family )
    {
      fam.push_back( { { "index", m.index },
                       { "stats", stats_json( m.stats ) },
                       { "strict_ok", m.strict_ok },
                       { "sat", m.sat } } );
      text << "C_" << m.index << " gates " << m.stats.gates << " inputs " << m.stats.inputs << " depth "
           << m.stats.depth << ( m.strict_ok ? "" : " (exceeds log inputs)" ) << ( m.sat ? " SAT" : " UNSAT" )
           << '\n';
    }
    doc["family"] = fam;
    doc["index"] = r.index ? json( *r.index ) : json( nullptr );
    doc["witness"] = r.witness ? json( r.witness->str() ) : json( nullptr );
    doc["evaluations"] = r.evaluations;
  }
  doc["member"] = member;
  ctx.emit( doc, text.str() );
  return member ? exit_code::sat : exit_code::unsat;
}

std::pair<std::string, std::string> split_assignment( const std::string& s, const std::string& key )
{
  const auto eq = s.find( '=' );
  if ( eq == std::string::npos || trim( s.substr( 0, eq ) ) != key )
    throw CLI::ValidationError( "expected " + key + "=<expr>, got '" + s + "'" );
  return { key, s.substr( eq + 1 ) };
}

int cmd_transform( const context& ctx, const std::string& manifest, const std::string& pad_arg,
                   const std::string& translate_arg, const std::string& input )
{
  if ( pad_arg.empty() == translate_arg.empty() )
    throw CLI::ValidationError( "exactly one of --pad and --translate is required" );
  const auto inst = load_manifest( manifest );
  dtiwi_instance out;
  json doc;
  std::ostringstream text;
  if ( !pad_arg.empty() )
  {
    const auto f = bound_expr::parse( split_assignment( pad_arg, "f" ).second );
    out = padding_transform( inst, f );
    if ( !input.empty() )
    {
      const auto y = pad( f, load_pstring( input ) );
      doc["input"] = y.str();
      text << "input: " << y.str() << '\n';
    }
  }
  else
  {
    const auto comma = translate_arg.find( ',' );
    if ( comma == std::string::npos )
      throw CLI::ValidationError( "--translate expects w=<expr>,w'=<expr>" );
    const auto w = bound_expr::parse( split_assignment( translate_arg.substr( 0, comma ), "w" ).second );
    const auto wp = bound_expr::parse( split_assignment( translate_arg.substr( comma + 1 ), "w'" ).second );
    out = translation_transform( inst, w, wp );
    if ( !input.empty() )
    {
      doc["input"] = load_pstring( input ).str();
      text << "input: " << load_pstring( input ).str() << '\n';
    }
  }
  // a verifier loaded from a file is referenced by an absolute path
  if ( fs::is_regular_file( fs::path( manifest ).parent_path() / out.verifier_name ) )
    out.verifier_name = fs::absolute( fs::path( manifest ).parent_path() / out.verifier_name ).string();
  doc["manifest"] = to_manifest( out );
  text << to_manifest( out );
  ctx.emit( doc, text.str() );
  return 0;
}

int cmd_tradeoff( const context& ctx, const std::string& alpha_text, std::uint64_t kmax,
                  const std::string& epsilon_text, const std::string& target_text )
{
  const auto mode = precision_from_env();
  const auto alpha = parse_rational( alpha_text );
  const auto rows = tradeoff_table( alpha, kmax, mode );
  json doc{ { "alpha", alpha_text }, { "precision", mode == precision::exact ? "rational" : "float" } };
  json table = json::array();
  std::ostringstream text;
  text << "k z exponent ratio\n";
  for ( const auto& r : rows )
  {
    const auto z = number_text( r.z, r.z_f, mode ), e = number_text( r.exponent, r.exponent_f, mode ),
               q = number_text( r.ratio, r.ratio_f, mode );
    table.push_back( { { "k", r.k }, { "z", z }, { "exponent", e }, { "ratio", q } } );
    text << r.k << ' ' << z << ' ' << e << ' ' << q << '\n';
  }
  doc["rows"] = table;
  if ( !epsilon_text.empty() )
  {
    const auto k = required_k_for_epsilon( alpha, parse_rational( epsilon_text ) );
    doc["required_k"] = k;
    text << "required_k " << k << '\n';
  }
  if ( !target_text.empty() )
  {
    const auto base = required_base_alpha( parse_rational( target_text ).convert_to<double>(), kmax );
    char buf[64];
    std::snprintf( buf, sizeof buf, "%.15g", base );
    doc["base_alpha"] = buf;
    text << "base_alpha " << buf << '\n';
  }
  ctx.emit( doc, text.str() );
  return 0;
}

int emit_encoded( const context& ctx, const encoded& e, const std::string& dir )
{
  json doc{ { "input", e.input.str() }, { "manifest", to_manifest( e.instance ) } };
  std::ostringstream text;
  text << "input: " << e.input.str() << '\n' << to_manifest( e.instance );
  if ( !dir.empty() )
  {
    fs::create_directories( dir );
    write_file( fs::path( dir ) / "instance.manifest", to_manifest( e.instance ) );
    write_file( fs::path( dir ) / "input.txt", e.input.str() + "\n" );
    text << "wrote " << ( fs::path( dir ) / "instance.manifest" ).string() << '\n';
  }
  ctx.emit( doc, text.str() );
  return 0;
}

int cmd_clique( const context& ctx, const std::string& path, std::size_t k, const std::string& via )
{
  const auto g = parse_dimacs_graph( read_file( path ) );
  std::optional<std::vector<std::size_t>> found;
  if ( via == "subsets" )
    found = find_clique_by_subsets( g, k );
  else if ( via == "gadget" )
  {
    const auto r = solve( clique_gadget_circuit( g, k ), solve_mode::lenient, ctx.jobs );
    if ( r.sat )
      found = decode_clique_witness( r.witness, k, id_bits( g.num_vertices() ) );
  }
  else
  {
    const auto e = encode_clique( g, k );
    circuit_report r;
    if ( decide_via_circuits( e.instance, e.input, { std::nullopt, solve_mode::lenient, ctx.jobs }, &r ) )
      found = decode_clique_witness( *r.witness, k, id_bits( g.num_vertices() ) );
  }
  json doc{ { "via", via }, { "k", k }, { "clique", found.has_value() } };
  doc["vertices"] = found ? json( *found ) : json( nullptr );
  if ( found )
  {
    // reported 1-based like the input format
    json ids = json::array();
    for ( auto v : *found )
      ids.push_back( v + 1 );
    doc["vertices"] = ids;
  }
  ctx.emit( doc, found ? "clique " + vertex_list( *found ) + "\n" : "no clique\n" );
  return found ? exit_code::sat : exit_code::unsat;
}

int cmd_selftest( const context& ctx )
{
  const auto results = run_selftest( ctx.seed );
  json doc = json::array();
  std::ostringstream text;
  bool ok = true;
  for ( const auto& r : results )
  {
    doc.push_back( { { "suite", r.name }, { "passed", r.passed }, { "failed", r.failed } } );
    text << r.name << " passed " << r.passed << " failed " << r.failed << '\n';
    ok = ok && r.failed == 0;
  }
  ctx.emit( json{ { "seed", ctx.seed }, { "suites", doc } }, text.str() );
  return ok ? 0 : exit_code::domain_error;
}

} // namespace

int dispatch( int argc, const char* const* argv, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "forge: placeholder strings, verifier circuits and log-CircuitSAT", "forge" };
  app.fallthrough();
  app.require_subcommand( 1 );

  context ctx{ out };
  app.add_flag( "--json", ctx.as_json, "Emit one JSON document" );
  app.add_option( "--jobs", ctx.jobs, "Worker threads" )->check( CLI::Range( 1u, 256u ) );
  app.add_option( "--seed", ctx.seed, "Seed for randomized suites" );

  std::function<int()> action;

  // tm run
  auto* tm = app.add_subcommand( "tm", "Run a machine" );
  tm->require_subcommand( 1 );
  auto* tm_run = tm->add_subcommand( "run", "Run a machine on an input" );
  std::string machine_arg, input_arg, output_arg, manifest_arg, via = "circuits";
  std::uint64_t bound = 0;
  bool trace = false;
  tm_run->add_option( "machine", machine_arg, "Machine file or builtin name" )->required();
  tm_run->add_option( "input", input_arg, "Input string" )->required();
  tm_run->add_option( "--bound", bound, "Step bound" )->required();
  tm_run->add_flag( "--trace", trace, "Print every configuration" );
  tm_run->callback( [&] { action = [&] { return cmd_tm_run( ctx, machine_arg, input_arg, bound, trace ); }; } );

  // compile
  auto* comp = app.add_subcommand( "compile", "Compile a machine into a circuit" );
  std::size_t expose = 0;
  bool raw = false, as_text = false;
  comp->add_option( "machine", machine_arg, "Machine file or builtin name" )->required();
  comp->add_option( "--input", input_arg, "Input string" )->required();
  comp->add_option( "--expose", expose, "Number of leading placeholders exposed as inputs" );
  comp->add_option( "--bound", bound, "Time bound T" )->required();
  comp->add_option( "-o,--output", output_arg, "Output circuit file" );
  comp->add_flag( "--raw", raw, "Build the full grid without folding" );
  comp->add_flag( "--text", as_text, "Write the text format" );
  comp->callback( [&] {
    action = [&] { return cmd_compile( ctx, machine_arg, input_arg, expose, bound, output_arg, raw, as_text ); };
  } );

  // solve
  auto* sol = app.add_subcommand( "solve", "Decide satisfiability of a circuit" );
  bool lenient = false;
  sol->add_option( "circuit", input_arg, "Circuit file (binary or text)" )->required();
  sol->add_flag( "--lenient", lenient, "Allow more than log(m) inputs" );
  sol->callback( [&] { action = [&] { return cmd_solve( ctx, input_arg, lenient ); }; } );

  // decide
  auto* dec = app.add_subcommand( "decide", "Decide membership in an instance" );
  bool strict = false;
  dec->add_option( "manifest", manifest_arg, "Instance manifest" )->required();
  dec->add_option( "input", input_arg, "Input string or file" )->required();
  dec->add_option( "--via", via, "circuits or bruteforce" )->check( CLI::IsMember( { "circuits", "bruteforce" } ) );
  dec->add_flag( "--strict", strict, "Require log(m) inputs per family member" );
  dec->callback( [&] { action = [&] { return cmd_decide( ctx, manifest_arg, input_arg, via, strict ); }; } );

  // transform
  auto* tr = app.add_subcommand( "transform", "Apply the padding or translation construction" );
  std::string pad_arg, translate_arg;
  tr->add_option( "manifest", manifest_arg, "Instance manifest" )->required();
  tr->add_option( "--pad", pad_arg, "f=<expr>" );
  tr->add_option( "--translate", translate_arg, "w=<expr>,w'=<expr>" );
  tr->add_option( "--input", input_arg, "Input to carry over" );
  tr->callback( [&] { action = [&] { return cmd_transform( ctx, manifest_arg, pad_arg, translate_arg, input_arg ); }; } );

  // tradeoff
  auto* to = app.add_subcommand( "tradeoff", "Tabulate z(alpha, k) and exponents" );
  std::string alpha_arg, epsilon_arg, target_arg;
  std::uint64_t kmax = 0;
  to->add_option( "--alpha", alpha_arg, "alpha as 3/2 or 1.5" )->required();
  to->add_option( "--kmax", kmax, "Largest k" )->required();
  to->add_option( "--epsilon", epsilon_arg, "Report the smallest k for this epsilon" );
  to->add_option( "--target", target_arg, "Report target^(1/(kmax+1))" );
  to->callback( [&] { action = [&] { return cmd_tradeoff( ctx, alpha_arg, kmax, epsilon_arg, target_arg ); }; } );

  // encode
  auto* enc = app.add_subcommand( "encode", "Encode a problem instance" );
  enc->require_subcommand( 1 );
  std::string dir_arg;
  std::size_t k = 0;
  auto* enc_sat = enc->add_subcommand( "sat", "DIMACS CNF" );
  enc_sat->add_option( "file", input_arg )->required();
  enc_sat->add_option( "-o,--output-dir", dir_arg );
  enc_sat->callback( [&] {
    action = [&] { return emit_encoded( ctx, encode_sat( parse_dimacs_cnf( read_file( input_arg ) ) ), dir_arg ); };
  } );
  auto* enc_clique = enc->add_subcommand( "clique", "DIMACS graph" );
  enc_clique->add_option( "file", input_arg )->required();
  enc_clique->add_option( "--k", k )->required();
  enc_clique->add_option( "-o,--output-dir", dir_arg );
  enc_clique->callback( [&] {
    action = [&] { return emit_encoded( ctx, encode_clique( parse_dimacs_graph( read_file( input_arg ) ), k ), dir_arg ); };
  } );
  auto* enc_circuit = enc->add_subcommand( "circuit", "Circuit file" );
  enc_circuit->add_option( "file", input_arg )->required();
  enc_circuit->add_option( "-o,--output-dir", dir_arg );
  enc_circuit->callback( [&] {
    action = [&] { return emit_encoded( ctx, encode_circuit_sat( load_circuit( input_arg ) ), dir_arg ); };
  } );

  // clique
  auto* cl = app.add_subcommand( "clique", "Search for a k-clique" );
  std::string clique_via = "pipeline";
  cl->add_option( "graph", input_arg, "DIMACS graph" )->required();
  cl->add_option( "--k", k )->required();
  cl->add_option( "--via", clique_via )->check( CLI::IsMember( { "pipeline", "gadget", "subsets" } ) );
  cl->callback( [&] { action = [&] { return cmd_clique( ctx, input_arg, k, clique_via ); }; } );

  // selftest
  auto* st = app.add_subcommand( "selftest", "Run the built-in oracle checks" );
  st->callback( [&] { action = [&] { return cmd_selftest( ctx ); }; } );

  try
  {
    app.parse( argc, argv );
    return action();
  }
  catch ( const CLI::ParseError& e )
  {
    const auto code = app.exit( e, out, err );
    return code == 0 ? 0 : exit_code::usage;
  }
  catch ( const error& e )
  {
    if ( ctx.as_json )
      out << json{ { "error", e.kind() }, { "detail", e.detail() } }.dump( 2 ) << '\n';
    err << "error: " << e.what() << '\n';
    return exit_code::domain_error;
  }
  catch ( const std::exception& e )
  {
    err << "error: " << e.what() << '\n';
    return exit_code::domain_error;
  }
}

} // namespace forge
