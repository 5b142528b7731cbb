/** Snake draft order math.
 *
 * Overall picks are 1-based. Even rounds (0, 2, ...) run seat 0 upward,
 * odd rounds run back down, so seat 0 in a 6-team draft owns picks
 * 1, 12, 13, 24, ... Mirrors the order the service uses to assign seats.
 */

export function roundForPick(overallPick: number, teams: number): number {
  if (overallPick < 1 || teams < 1) {
    throw new RangeError("overallPick must be >= 1 and teams >= 1");
  }
  return Math.floor((overallPick - 1) / teams);
}

export function seatForPick(overallPick: number, teams: number): number {
  const round = roundForPick(overallPick, teams);
  const offset = (overallPick - 1) % teams;
  return round % 2 === 0 ? offset : teams - 1 - offset;
}

export function overallFor(seat: number, round: number, teams: number): number {
  if (seat < 0 || seat >= teams || round < 0) {
    throw new RangeError("seat must be in [0, teams) and round >= 0");
  }
  const offset = round % 2 === 0 ? seat : teams - 1 - seat;
  return round * teams + offset + 1;
}

/** layout[round][seat] = overall pick number that seat makes in that round. */
export function boardLayout(teams: number, rounds: number): number[][] {
  const layout: number[][] = [];
  for (let round = 0; round < rounds; round += 1) {
    const row: number[] = [];
    for (let seat = 0; seat < teams; seat += 1) {
      row.push(overallFor(seat, round, teams));
    }
    layout.push(row);
  }
  return layout;
}

/** Overall pick numbers one seat makes across the whole draft, in order. */
export function picksForSeat(seat: number, teams: number, rounds: number): number[] {
  const picks: number[] = [];
  for (let round = 0; round < rounds; round += 1) {
    picks.push(overallFor(seat, round, teams));
  }
  return picks;
}
