import init, { braidMatrix, ghzState, ghzQProfile, verifyBraid } from "./pkg/qudit_braid_web.js";

const $ = (id) => document.getElementById(id);
const int = (id) => parseInt($(id).value, 10);

function color(re, im, scale) {
  const mag = Math.min(1, Math.hypot(re, im) / scale);
  const hue = ((Math.atan2(im, re) / (2 * Math.PI)) * 360 + 360) % 360;
  return `hsl(${hue.toFixed(1)}, 85%, ${(mag * 55).toFixed(1)}%)`;
}

function maxAbs(flat) {
  let m = 0;
  for (let i = 0; i < flat.length; i += 2) m = Math.max(m, Math.hypot(flat[i], flat[i + 1]));
  return m || 1;
}

function paint(canvas, flat, rows, cols) {
  const ctx = canvas.getContext("2d");
  const cw = canvas.width / cols;
  const ch = canvas.height / rows;
  const scale = maxAbs(flat);
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  for (let r = 0; r < rows; r++) {
    for (let c = 0; c < cols; c++) {
      const i = 2 * (r * cols + c);
      ctx.fillStyle = color(flat[i], flat[i + 1], scale);
      ctx.fillRect(c * cw, r * ch, Math.ceil(cw), Math.ceil(ch));
    }
  }
}

function guarded(info, f) {
  try {
    info.classList.remove("error");
    f();
  } catch (e) {
    info.classList.add("error");
    info.textContent = String(e.message ?? e);
  }
}

function drawBraid() {
  guarded($("s-info"), () => {
    const flat = braidMatrix(int("s-d"), int("s-n"));
    const dim = Math.round(Math.sqrt(flat.length / 2));
    paint($("s-canvas"), flat, dim, dim);
    $("s-info").textContent = `${dim} x ${dim}`;
  });
}

function drawGhz() {
  guarded($("g-info"), () => {
    const k = Uint32Array.from($("g-k").value.split(",").map((s) => parseInt(s.trim(), 10)));
    const d = int("g-d");
    const flat = ghzState(d, k, $("g-braid").checked);
    paint($("g-canvas"), flat, 1, flat.length / 2);
    const q = Array.from(ghzQProfile(d, k)).map((v, i) => `Q${i + 1} = ${v.toFixed(6)}`);
    $("g-info").textContent = `${flat.length / 2} amplitudes; ${q.join(", ") || "no Q for one site"}`;
  });
}

function runCheck() {
  guarded($("v-out"), () => {
    const report = JSON.parse(verifyBraid(int("v-d"), int("v-n")));
    const lines = report.checks.map(
      (c) => `${c.pass ? "PASS" : "FAIL"}  ${c.name}  residual ${c.residual.toExponential(2)}`,
    );
    $("v-out").textContent = lines.concat(`overall: ${report.pass ? "pass" : "fail"}`).join("\n");
  });
}

await init();
$("s-go").onclick = drawBraid;
$("g-go").onclick = drawGhz;
$("v-go").onclick = runCheck;
drawBraid();
drawGhz();
runCheck();
