import init, { evaluate, render, verify, abelianize } from "./pkg/invbraid_web.js";

const $ = (id) => document.getElementById(id);

function show(out, fn) {
  try {
    out.textContent = fn();
    out.className = "";
    return true;
  } catch (err) {
    out.textContent = String(err);
    out.className = "error";
    return false;
  }
}

function cell(row, text) {
  const td = row.insertCell();
  td.textContent = text;
}

function onEvaluate(event) {
  event?.preventDefault();
  const word = $("eval-word").value;
  const n = Number($("eval-n").value);
  const ok = show($("eval-out"), () => evaluate(word, n));
  $("eval-svg").innerHTML = ok ? render(word, n) : "";
}

function onVerify(event) {
  event?.preventDefault();
  const table = $("verify-table");
  table.replaceChildren();
  let report;
  const ok = show($("verify-summary"), () => {
    report = JSON.parse(verify($("verify-id").value, Number($("verify-n").value)));
    const failed = report.pairs.filter((p) => !p.equal).length;
    return `${report.id} at n = ${report.n}: ${report.pairs.length} relations, ${failed} failed`;
  });
  if (!ok) return;
  const head = table.createTHead().insertRow();
  for (const h of ["lhs", "rhs", "image"]) {
    const th = document.createElement("th");
    th.textContent = h;
    head.appendChild(th);
  }
  const body = table.createTBody();
  for (const p of report.pairs) {
    const row = body.insertRow();
    if (!p.equal) row.className = "bad";
    cell(row, p.lhs || "1");
    cell(row, p.rhs || "1");
    cell(row, p.equal ? p.image_lhs : `${p.image_lhs} vs ${p.image_rhs}`);
  }
}

function onAbelianize(event) {
  event?.preventDefault();
  show($("ab-out"), () => abelianize($("ab-word").value, $("ab-mod2").checked));
}

await init();
$("eval-form").addEventListener("submit", onEvaluate);
$("verify-form").addEventListener("submit", onVerify);
$("ab-form").addEventListener("submit", onAbelianize);
onEvaluate();
onVerify();
onAbelianize();
